//! Resolution of descriptors to corepresentations, with a shared cache.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::dual::Dual;
use crate::scalar::Series;

use super::{CoordError, Corep, CorepLabel, Descriptor};

pub struct Registry {
    dual: Arc<Dual>,
    cache: Mutex<BTreeMap<String, Arc<Corep>>>,
}

impl Registry {
    pub fn new(dual: Arc<Dual>) -> Registry {
        Registry {
            dual,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn dual(&self) -> &Arc<Dual> {
        &self.dual
    }

    pub fn resolve(&self, descriptor: &str) -> Result<Arc<Corep>, CoordError> {
        let d = Descriptor::parse(descriptor)?;
        self.get(&d)
    }

    pub fn get(&self, d: &Descriptor) -> Result<Arc<Corep>, CoordError> {
        let key = d.to_string();
        if let Some(c) = self.cache.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let built = Arc::new(self.build(d)?);
        self.cache.lock().unwrap().entry(key).or_insert(built.clone());
        Ok(built)
    }

    fn build(&self, d: &Descriptor) -> Result<Corep, CoordError> {
        let alg = self.dual.alg();
        Ok(match d {
            Descriptor::Trivial => Corep::trivial(),
            Descriptor::Fundamental => alg.fundamental(),
            Descriptor::FundamentalContra => alg.contragredient(&alg.fundamental()),
            Descriptor::Minor(k) => alg.minor_corep(*k)?,
            Descriptor::Contra(inner) => alg.contragredient(&*self.get(inner)?),
            Descriptor::Tensor(parts) => {
                let parts: Vec<Arc<Corep>> = parts.iter().map(|p| self.get(p)).collect::<Result<_, _>>()?;
                parts[1..].iter().fold((*parts[0]).clone(), |acc, p| Corep::tensor(&acc, p))
            }
            Descriptor::Sum(parts) => {
                let parts: Vec<Corep> = parts
                    .iter()
                    .map(|p| self.get(p).map(|c| (*c).clone()))
                    .collect::<Result<_, _>>()?;
                Corep::direct_sum(&parts)
            }
            Descriptor::Proj(name, inner) => self.projected(name, &*self.get(inner)?)?,
        })
    }

    /// Spectral summand of `u ⊗ u` cut out by an idempotent of `R̂`.
    fn projected(&self, name: &str, parent: &Corep) -> Result<Corep, CoordError> {
        let alg = self.dual.alg();
        let uu = CorepLabel::Tensor(vec![CorepLabel::Fundamental, CorepLabel::Fundamental]);
        if parent.label() != &uu {
            return Err(CoordError::Unsupported(format!(
                "projectors are available on tensor(u,u) only, not {}",
                parent.label()
            )));
        }
        let q = alg.config().q();
        let spectral = alg.rdata().spectral_projectors()?;
        let pick = spectral.iter().find(|s| match name {
            "sym" => s.eigenvalue == q,
            "anti" => s.eigenvalue == -&q.pow(-1),
            _ => s.eigenvalue != q && s.eigenvalue != -&q.pow(-1),
        });
        let Some(s) = pick else {
            return Err(CoordError::Unsupported(format!(
                "no '{name}' summand of tensor(u,u) for {}",
                alg.config().label()
            )));
        };
        if name == "triv" && alg.config().series != Series::C {
            return Err(CoordError::Unsupported("'triv' exists for the C series only".into()));
        }
        let v = parent.compress(&s.projector, name);
        let check = self.dual.check_comatrix(&v, v.degree());
        if !check.is_equal() {
            return Err(CoordError::NotInvariant(format!("{check:?}")));
        }
        Ok(v)
    }
}
