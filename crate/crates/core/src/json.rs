//! Wire formats: JSON documents for lattices, semilattices, congruence
//! block listings, and tensor summaries, plus `load_spec` for resolving
//! `@catalog` names and file paths.

use serde::{Deserialize, Serialize};

use crate::catalog::catalog;
use crate::congruence::ConLattice;
use crate::error::{Error, Result};
use crate::grid::BitGrid;
use crate::lattice::FinLattice;
use crate::poset::FinPoset;
use crate::semilattice::FinJoinSemilattice;
use crate::tensor::TensorAlgebra;

/// A lattice on the wire: element labels in canonical order and cover
/// pairs listed child then parent.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl LatticeDoc {
    pub fn from_lattice(name: &str, l: &FinLattice) -> Self {
        LatticeDoc {
            name: name.to_string(),
            elements: l.labels().to_vec(),
            covers: l
                .poset()
                .covers()
                .into_iter()
                .map(|(lo, hi)| [l.label(lo).to_string(), l.label(hi).to_string()])
                .collect(),
        }
    }

    pub fn to_lattice(&self) -> Result<FinLattice> {
        let covers: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|[a, b]| (a.clone(), b.clone()))
            .collect();
        FinLattice::from_poset(FinPoset::from_covers(&self.elements, &covers)?)
    }
}

/// A join-semilattice on the wire. Only joins have to exist; the `kind`
/// field keeps the two document shapes apart.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemilatticeDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl SemilatticeDoc {
    pub fn from_semilattice(name: &str, s: &FinJoinSemilattice) -> Self {
        SemilatticeDoc {
            kind: "semilattice".to_string(),
            name: Some(name.to_string()),
            elements: s.labels().to_vec(),
            covers: semilattice_covers(s)
                .into_iter()
                .map(|(lo, hi)| [s.label(lo).to_string(), s.label(hi).to_string()])
                .collect(),
        }
    }

    pub fn to_semilattice(&self) -> Result<FinJoinSemilattice> {
        if self.kind != "semilattice" {
            return Err(Error::InvalidDocument(format!(
                "unexpected kind {:?}",
                self.kind
            )));
        }
        let covers: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|[a, b]| (a.clone(), b.clone()))
            .collect();
        FinJoinSemilattice::from_covers(&self.elements, &covers)
    }
}

fn semilattice_covers(s: &FinJoinSemilattice) -> Vec<(usize, usize)> {
    let n = s.size();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if s.lt(a, b) && !(0..n).any(|c| s.lt(a, c) && s.lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Resolves `@name` through the catalog, anything else as a JSON file path.
pub fn load_spec(spec: &str) -> Result<FinLattice> {
    if let Some(name) = spec.strip_prefix('@') {
        return catalog(name);
    }
    let text = std::fs::read_to_string(spec)?;
    parse_lattice_document(&text)
}

/// Accepts either document shape. A semilattice document still has to
/// carry a full lattice order to load here.
pub fn parse_lattice_document(text: &str) -> Result<FinLattice> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("kind").is_some() {
        let doc: SemilatticeDoc = serde_json::from_value(value)?;
        let covers: Vec<(String, String)> = doc
            .covers
            .iter()
            .map(|[a, b]| (a.clone(), b.clone()))
            .collect();
        doc.to_semilattice()?;
        FinLattice::from_poset(FinPoset::from_covers(&doc.elements, &covers)?)
    } else {
        let doc: LatticeDoc = serde_json::from_value(value)?;
        doc.to_lattice()
    }
}

/// Congruences of a lattice as block listings. Blocks are ordered by least
/// member, each block lists element labels in canonical order.
#[derive(Clone, Debug, Serialize)]
pub struct CongruenceBlocksDoc {
    pub name: String,
    pub congruences: Vec<CongruenceEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CongruenceEntry {
    pub label: String,
    pub blocks: Vec<Vec<String>>,
}

pub fn congruence_blocks(name: &str, l: &FinLattice, con: &ConLattice) -> CongruenceBlocksDoc {
    let congruences = con
        .members()
        .iter()
        .enumerate()
        .map(|(i, theta)| {
            let mut blocks = vec![Vec::new(); theta.num_blocks()];
            for (x, &b) in theta.block_of().iter().enumerate() {
                blocks[b].push(l.label(x).to_string());
            }
            CongruenceEntry {
                label: format!("c{i}"),
                blocks,
            }
        })
        .collect();
    CongruenceBlocksDoc {
        name: name.to_string(),
        congruences,
    }
}

/// Rows of a bi-ideal grid, top factor in canonical order, each row a 0/1
/// string over the second factor in canonical order.
pub fn grid_rows(g: &BitGrid) -> Vec<String> {
    (0..g.rows())
        .map(|x| {
            (0..g.cols())
                .map(|y| if g.get(x, y) { '1' } else { '0' })
                .collect()
        })
        .collect()
}

/// Summary of a constructed tensor algebra.
#[derive(Clone, Debug, Serialize)]
pub struct TensorSummaryDoc {
    pub factors: [String; 2],
    pub size: usize,
    pub atoms: usize,
    pub sample_caps: Vec<CapEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CapEntry {
    pub label: String,
    pub cap: Vec<[String; 2]>,
    pub rows: Vec<String>,
}

/// The first few elements in canonical order plus the top, with caps as
/// sorted label pairs and the raw grid rows.
pub fn tensor_summary(names: (&str, &str), t: &TensorAlgebra) -> TensorSummaryDoc {
    let mut picks: Vec<usize> = (0..t.size().min(7)).collect();
    if !picks.contains(&t.one()) {
        picks.push(t.one());
    }
    let sample_caps = picks
        .into_iter()
        .map(|i| {
            let mut cap: Vec<[String; 2]> = t
                .cap(i)
                .iter()
                .map(|&(x, y)| {
                    [
                        t.factor_a().label(x).to_string(),
                        t.factor_b().label(y).to_string(),
                    ]
                })
                .collect();
            cap.sort();
            CapEntry {
                label: t.label(i).to_string(),
                cap,
                rows: grid_rows(t.element(i).grid()),
            }
        })
        .collect();
    TensorSummaryDoc {
        factors: [names.0.to_string(), names.1.to_string()],
        size: t.size(),
        atoms: t.atoms().len(),
        sample_caps,
    }
}
