use serde::Serialize;

use super::algebra::FusionAlgebra;
use crate::{Error, Partition, Result};

/// One nonzero structure constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub d: u64,
    #[serde(rename = "N")]
    pub value: u64,
}

/// All nonzero `N_{λμ}^ν` of 𝒱_k(n) in canonical basis order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionTable {
    pub k: usize,
    pub n: usize,
    pub entries: Vec<FusionEntry>,
}

impl FusionTable {
    pub fn from_algebra(alg: &FusionAlgebra) -> Result<Self> {
        let mut entries = Vec::new();
        for l in alg.basis() {
            for m in alg.basis() {
                let mut row = alg.structure_constants(l, m)?;
                row.sort_by(|a, b| b.0.cmp(&a.0));
                for (nu, d, v) in row {
                    let value = u64::try_from(&v).map_err(|_| Error::Csv(format!("N={v} out of range")))?;
                    entries.push(FusionEntry { lambda: l.clone(), mu: m.clone(), nu, d, value });
                }
            }
        }
        Ok(FusionTable { k: alg.k(), n: alg.n(), entries })
    }

    /// CSV with columns `lambda,mu,nu,d,N`; partitions are comma-joined.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Csv(e.to_string());
        w.write_record(["lambda", "mu", "nu", "d", "N"]).map_err(err)?;
        for e in &self.entries {
            w.write_record([join(&e.lambda), join(&e.mu), join(&e.nu), e.d.to_string(), e.value.to_string()])
                .map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Csv(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Csv(e.to_string()))
    }
}

fn join(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_one_table() {
        let t = FusionTable::from_algebra(&FusionAlgebra::new(1, 4).unwrap()).unwrap();
        assert_eq!(t.entries.len(), 16);
        assert!(t.entries.iter().all(|e| e.value == 1));
        let csv = t.to_csv().unwrap();
        assert!(csv.starts_with("lambda,mu,nu,d,N\n4,4,4,1,1\n"));
    }

    #[test]
    fn json_shape() {
        let t = FusionTable::from_algebra(&FusionAlgebra::new(1, 2).unwrap()).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with(r#"{"k":1,"n":2,"entries":[{"lambda":[2],"mu":[2],"nu":[2],"d":1,"N":1}"#), "{s}");
    }

    #[test]
    fn csv_quotes_multi_part_weights() {
        let t = FusionTable::from_algebra(&FusionAlgebra::new(2, 2).unwrap()).unwrap();
        assert!(t.to_csv().unwrap().contains("\"2,2\""));
    }
}
