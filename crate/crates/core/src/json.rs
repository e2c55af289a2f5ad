//! Serialized documents.
//!
//! Partitions are written as multiplicity vectors and riggings as one list
//! per row length, so documents are lossless and canonical:
//!
//! ```json
//! {"params": {"k":1,"l1":1,"l2":1,"l3":1,"M":1,"N":1},
//!  "pieces": [{"m":1,"n":1,"count":1,
//!              "elements":[{"mu":[1],"r":[[0]],"nu":[1],"s":[[0]],"degree":1}]}]}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::characters::rig_degree;
use crate::riggedsets::{is_member, RiggedSet};
use crate::{Error, IndexSet, Params, Partition, Result, RiggedPair, Rigging};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub mu: Vec<usize>,
    pub r: Vec<Vec<i64>>,
    pub nu: Vec<usize>,
    pub s: Vec<Vec<i64>>,
    pub degree: i64,
}

impl ElementDoc {
    /// Document for `x`, with the degree taken at labels `(l1, l2)`.
    pub fn new(x: &RiggedPair, l1: i64, l2: i64) -> Self {
        ElementDoc {
            mu: x.mu.multiplicities().to_vec(),
            r: x.r.rows().to_vec(),
            nu: x.nu.multiplicities().to_vec(),
            s: x.s.rows().to_vec(),
            degree: rig_degree(x, l1, l2),
        }
    }

    /// Rebuilds the rigged pair, checking every structural invariant.
    pub fn to_pair(&self) -> Result<RiggedPair> {
        let k = self.mu.len();
        RiggedPair::new(
            Partition::new(k, self.mu.clone())?,
            Rigging::new(self.r.clone())?,
            Partition::new(k, self.nu.clone())?,
            Rigging::new(self.s.clone())?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
}

impl PairDoc {
    pub fn new(i: &IndexSet, j: &IndexSet) -> Self {
        PairDoc {
            i: i.members().to_vec(),
            j: j.members().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceDoc {
    pub m: i64,
    pub n: i64,
    pub count: usize,
    pub elements: Vec<ElementDoc>,
}

impl PieceDoc {
    pub fn new(set: &RiggedSet) -> Self {
        let (l1, l2) = (set.params.l1(), set.params.l2());
        PieceDoc {
            m: set.m,
            n: set.n,
            count: set.len(),
            elements: set.elements.iter().map(|x| ElementDoc::new(x, l1, l2)).collect(),
        }
    }
}

/// Output of an enumeration: every requested graded piece in increasing
/// `(m, n)` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumDoc {
    pub params: Params,
    pub pieces: Vec<PieceDoc>,
}

impl EnumDoc {
    pub fn new(params: &Params, pieces: impl IntoIterator<Item = PieceDoc>) -> Self {
        EnumDoc {
            params: *params,
            pieces: pieces.into_iter().collect(),
        }
    }

    pub fn from_total(params: &Params, total: &BTreeMap<(i64, i64), RiggedSet>) -> Self {
        EnumDoc::new(params, total.values().map(PieceDoc::new))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    /// Parses and validates a document: counts, weights, degrees,
    /// membership and canonical order must all be consistent.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: EnumDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let p = doc.params;
        let mut last_piece = None;
        for piece in &doc.pieces {
            if last_piece.is_some_and(|prev| prev >= (piece.m, piece.n)) {
                return Err(Error::Parse("pieces are not in increasing (m, n) order".into()));
            }
            last_piece = Some((piece.m, piece.n));
            if piece.count != piece.elements.len() {
                return Err(Error::Parse(format!(
                    "piece ({}, {}) declares {} elements but lists {}",
                    piece.m,
                    piece.n,
                    piece.count,
                    piece.elements.len()
                )));
            }
            let mut prev: Option<RiggedPair> = None;
            for e in &piece.elements {
                let x = e.to_pair()?;
                if x.k() != p.k() || x.mu.weight() != piece.m || x.nu.weight() != piece.n {
                    return Err(Error::Parse("element has the wrong level or weight".into()));
                }
                if rig_degree(&x, p.l1(), p.l2()) != e.degree {
                    return Err(Error::Parse("element degree does not match".into()));
                }
                if !is_member(&x, &p) {
                    return Err(Error::Parse(format!("element {x} is not in the set")));
                }
                if prev.as_ref().is_some_and(|y| y >= &x) {
                    return Err(Error::Parse("elements are not in canonical order".into()));
                }
                prev = Some(x);
            }
        }
        Ok(doc)
    }
}
