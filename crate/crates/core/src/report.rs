//! Structured verification results.
//!
//! A [`Report`] records which identity was checked at which grid point,
//! whether it held, and on failure the first counterexample with enough
//! context to reproduce it.

use serde::{Deserialize, Serialize};

use crate::json::{ElementDoc, PairDoc};
use crate::{LaurentPoly, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Recursion,
    LowerDecomposition,
    UpperDecomposition,
    Bijection,
    Grading,
    Fermionic,
    CharRecursion,
}

/// A grid point. For upper decompositions `params` holds the primed labels
/// and the upper cutoffs, and `l1`, `a`, `c` the originating data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l1: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<i64>,
}

impl Point {
    pub fn of(params: &Params) -> Self {
        Point {
            params: *params,
            m: None,
            n: None,
            l1: None,
            a: None,
            c: None,
        }
    }

    pub fn at(params: &Params, m: i64, n: i64) -> Self {
        Point {
            m: Some(m),
            n: Some(n),
            ..Point::of(params)
        }
    }
}

/// One `(a, c)` term on the right-hand side of a recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermCount {
    pub a: i64,
    pub c: i64,
    /// `(l1', l2', l3')`.
    pub labels: [i64; 3],
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub poly: Option<String>,
}

impl TermCount {
    pub fn count(a: i64, c: i64, primed: &Params, count: usize) -> Self {
        TermCount {
            a,
            c,
            labels: labels(primed),
            count: Some(count),
            poly: None,
        }
    }

    pub fn poly(a: i64, c: i64, primed: &Params, poly: &LaurentPoly) -> Self {
        TermCount {
            a,
            c,
            labels: labels(primed),
            count: None,
            poly: Some(poly.to_string()),
        }
    }
}

fn labels(p: &Params) -> [i64; 3] {
    [p.l1(), p.l2(), p.l3()]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Failure {
    /// The two sides of a cardinality identity differ.
    Cardinality { lhs: usize, rhs: usize },
    /// An element covered the wrong number of times.
    Coverage {
        element: ElementDoc,
        expected: usize,
        covering_pairs: Vec<PairDoc>,
    },
    /// A nonempty subset whose bound vectors exceed the vacancy numbers.
    Bound {
        element: ElementDoc,
        pair: PairDoc,
        detail: String,
    },
    /// The map between upper and lower subsets misbehaved.
    Image {
        pair: PairDoc,
        detail: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        element: Option<ElementDoc>,
    },
    /// The graded sums over an upper subset and its image differ.
    Grading {
        pair: PairDoc,
        lhs: String,
        rhs: String,
        difference: String,
    },
    /// Two polynomials that should agree do not.
    Polynomial {
        lhs: String,
        rhs: String,
        difference: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: Check,
    pub point: Point,
    pub passed: bool,
    /// Number of elements (or terms) inspected.
    pub examined: usize,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub terms: Vec<TermCount>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure: Option<Failure>,
}
