//! Cocycle files: `{"degree", "modulus" | "module", "entries", "normalized"}`.
//!
//! Entries map `"g,h,k"` (element ids) to an exponent for `mu_N`, or to an
//! element id of the module group. Omitted entries are the identity.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{Cochain, CoefficientModule};
use crate::error::{Error, Result};
use crate::group::{build_group, FiniteGroup, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleFile {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<GroupSpec>,
    /// `action[g][a]`, for a module with nontrivial action.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub entries: IndexMap<String, i64>,
    #[serde(default)]
    pub normalized: bool,
}

impl CocycleFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("cocycle file: {e}")))
    }

    /// Nonzero entries in table order.
    pub fn from_cochain(c: &Cochain) -> Self {
        let m = c.module();
        let cyclic = m.is_cyclic_unity();
        let mut entries = IndexMap::new();
        let n = c.group().order();
        for (idx, &v) in c.values().iter().enumerate() {
            if v == 0 {
                continue;
            }
            let mut args = vec![0; c.degree()];
            let mut rest = idx;
            for slot in args.iter_mut().rev() {
                *slot = rest % n;
                rest /= n;
            }
            let key = args.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            entries.insert(key, v as i64);
        }
        CocycleFile {
            degree: c.degree(),
            modulus: cyclic.then_some(m.order()),
            module: (!cyclic).then(|| GroupSpec::Table {
                name: m.group().name().map(str::to_string),
                order: m.order(),
                table: m.group().table_rows(),
            }),
            action: m.action().map(<[Vec<usize>]>::to_vec),
            entries,
            normalized: c.is_normalized(),
        }
    }

    pub fn coefficient_module(&self, group: &FiniteGroup) -> Result<CoefficientModule> {
        let base = match (&self.modulus, &self.module) {
            (Some(n), None) if *n > 0 => CoefficientModule::cyclic(*n),
            (None, Some(spec)) => CoefficientModule::from_group(build_group(spec)?)?,
            _ => {
                return Err(Error::Parse(
                    "cocycle file needs exactly one of a positive `modulus` or `module`".into(),
                ))
            }
        };
        match &self.action {
            Some(a) => base.with_action(group, a.clone()),
            None => Ok(base),
        }
    }

    pub fn to_cochain(&self, group: &FiniteGroup) -> Result<Cochain> {
        let module = self.coefficient_module(group)?;
        let mut c = Cochain::zero(group, &module, self.degree);
        for (key, &value) in &self.entries {
            let args: Vec<usize> = if key.trim().is_empty() {
                Vec::new()
            } else {
                key.split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad entry key `{key}`")))
                    })
                    .collect::<Result<_>>()?
            };
            if args.len() != self.degree {
                return Err(Error::Parse(format!(
                    "entry key `{key}` does not have {} arguments",
                    self.degree
                )));
            }
            for &g in &args {
                group.check_element(g)?;
            }
            let v = if self.modulus.is_some() {
                value.rem_euclid(module.order() as i64) as usize
            } else {
                let v = usize::try_from(value)
                    .map_err(|_| Error::Parse(format!("entry `{key}` is not an element id")))?;
                module.group().check_element(v)?;
                v
            };
            c.set(&args, v);
        }
        if self.normalized && !c.is_normalized() {
            return Err(Error::Parse(
                "cocycle marked normalized has a nonzero entry on a tuple containing the identity".into(),
            ));
        }
        Ok(c)
    }
}
