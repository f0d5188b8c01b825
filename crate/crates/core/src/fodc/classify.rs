use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::coordalg::{weyl_dim, Corep, Descriptor, Registry, YoungWeight};
use crate::dual::{rank_at, stabilized_rank, DualError, Functional, Policy};
use crate::scalar::{FieldConfig, Series, Zeta};

use super::{quantum_lie, FodcError, QuantumLieAlgebra};

/// Library of irreducible building blocks: frames with at most `bound` boxes.
#[derive(Clone, Debug)]
pub struct LibraryConfig {
    pub bound: usize,
    /// Admissible characters to try; all of them when `None`.
    pub zetas: Option<Vec<Zeta>>,
}

impl Default for LibraryConfig {
    fn default() -> Self {
        LibraryConfig { bound: 2, zetas: None }
    }
}

/// A corepresentation realising the irreducible of the given frame.
pub fn frame_descriptor(frame: &YoungWeight, config: &FieldConfig) -> Option<Descriptor> {
    let uu = || Box::new(Descriptor::Tensor(vec![Descriptor::Fundamental, Descriptor::Fundamental]));
    if frame.m.len() > config.rank() {
        return None;
    }
    match (frame.m.as_slice(), config.series) {
        ([], _) => Some(Descriptor::Trivial),
        ([1], _) => Some(Descriptor::Fundamental),
        ([2], _) => Some(Descriptor::Proj("sym".into(), uu())),
        ([0, 1], Series::A) => Some(Descriptor::Minor(2)),
        ([0, 1], Series::C) => Some(Descriptor::Proj("anti".into(), uu())),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub zeta: Zeta,
    pub frame: YoungWeight,
    pub descriptor: Descriptor,
    pub corep: Arc<Corep>,
}

impl Candidate {
    pub fn dim(&self) -> usize {
        self.corep.dim() * self.corep.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub zeta: String,
    pub frame: String,
    pub corep: String,
    pub dim: usize,
    pub cert_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub config: String,
    /// Number of input functionals.
    pub input_size: usize,
    /// Certified dimension of their span.
    pub certified_rank: usize,
    pub cert_degree: usize,
    pub components: Vec<Component>,
    pub total_dim: usize,
    pub residual_rank: usize,
    pub complete: bool,
    pub central_element: String,
    pub library_bound: usize,
    pub candidates_tested: usize,
}

fn library(registry: &Registry, lib: &LibraryConfig) -> Result<Vec<Candidate>, FodcError> {
    let config = registry.dual().config().clone();
    // characters outside Q(p)[w] are left out of the default library
    let zetas = lib
        .zetas
        .clone()
        .unwrap_or_else(|| config.admissible().into_iter().filter(|z| z.value().is_ok()).collect());
    let mut out = Vec::new();
    for frame in YoungWeight::all_up_to(lib.bound, config.rank()) {
        let Some(descriptor) = frame_descriptor(&frame, &config) else {
            continue;
        };
        let corep = registry.get(&descriptor)?;
        debug_assert_eq!(corep.dim() as u64, weyl_dim(&frame, &config));
        for zeta in &zetas {
            if frame.is_zero() && zeta.is_one() {
                continue;
            }
            out.push(Candidate {
                zeta: *zeta,
                frame: frame.clone(),
                descriptor: descriptor.clone(),
                corep: corep.clone(),
            });
        }
    }
    out.sort_by(|a, b| {
        b.dim()
            .cmp(&a.dim())
            .then(a.zeta.cmp(&b.zeta))
            .then(a.frame.cmp(&b.frame))
    });
    Ok(out)
}

/// Greedy decomposition of `span(x)` into calculi `Γ_ζ(v_λ)` from the library.
pub fn classify(
    registry: &Registry,
    x: &[Functional],
    lib: &LibraryConfig,
    policy: &Policy,
) -> Result<ClassificationReport, FodcError> {
    let dual = registry.dual();
    let total = stabilized_rank(x, policy)?;
    let candidates = library(registry, lib)?;

    let built: Vec<Result<(Candidate, QuantumLieAlgebra, usize, bool), FodcError>> = candidates
        .into_par_iter()
        .map(|c| {
            let ql = quantum_lie(dual, &c.corep, &c.zeta, policy)?;
            let mut union = x.to_vec();
            union.extend(ql.basis.iter().cloned());
            // an unstable union rank leaves containment unproven
            let joint = match stabilized_rank(&union, policy) {
                Ok(j) => Some(j),
                Err(DualError::RankUnstable { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let contained = ql.certified_dim.value == c.dim() && joint.as_ref().is_some_and(|j| j.value == total.value);
            let degree = total.degree.max(ql.certified_dim.degree).max(joint.map_or(0, |j| j.degree));
            Ok((c, ql, degree, contained))
        })
        .collect();

    let mut acc: Vec<Functional> = Vec::new();
    let mut acc_rank = 0;
    let mut components = Vec::new();
    let mut names = Vec::new();
    let mut tested = 0;
    let mut degree = total.degree;
    for entry in built {
        let (c, ql, d, contained) = entry?;
        tested += 1;
        if acc_rank == total.value {
            break;
        }
        if !contained || acc_rank + c.dim() > total.value {
            continue;
        }
        let mut union = acc.clone();
        union.extend(ql.basis.iter().cloned());
        let d = d.max(degree);
        if rank_at(&union, d) != acc_rank + c.dim() {
            continue;
        }
        degree = d;
        acc = union;
        acc_rank += c.dim();
        names.push(format!("c_{}({})", c.zeta, c.descriptor));
        components.push(Component {
            zeta: c.zeta.to_string(),
            frame: c.frame.to_string(),
            corep: c.descriptor.to_string(),
            dim: c.dim(),
            cert_degree: d,
        });
    }
    let residual = total.value - acc_rank;
    Ok(ClassificationReport {
        config: dual.config().label(),
        input_size: x.len(),
        certified_rank: total.value,
        cert_degree: total.degree,
        components,
        total_dim: acc_rank,
        residual_rank: residual,
        complete: residual == 0,
        central_element: if names.is_empty() { "0".into() } else { names.join(" + ") },
        library_bound: lib.bound,
        candidates_tested: tested,
    })
}
