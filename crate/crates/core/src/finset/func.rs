use serde::{Deserialize, Serialize};

use crate::diagram::Arrow;
use crate::error::{Error, Result};

/// A function `ord(dom) -> ord(cod)`, stored as its table of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFn<usize>")]
pub struct FinFn {
    dom: usize,
    cod: usize,
    table: Vec<usize>,
}

/// A partial function `ord(dom) -> ord(cod)`; `None` marks an undefined point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFn<Option<usize>>")]
pub struct PartialFn {
    dom: usize,
    cod: usize,
    table: Vec<Option<usize>>,
}

#[derive(Deserialize)]
struct RawFn<T> {
    dom: usize,
    cod: usize,
    table: Vec<T>,
}

impl TryFrom<RawFn<usize>> for FinFn {
    type Error = Error;
    fn try_from(raw: RawFn<usize>) -> Result<Self> {
        if raw.table.len() != raw.dom {
            return Err(Error::InvalidMorphism(format!(
                "table has {} entries, dom is {}",
                raw.table.len(),
                raw.dom
            )));
        }
        FinFn::new(raw.cod, raw.table)
    }
}

impl TryFrom<RawFn<Option<usize>>> for PartialFn {
    type Error = Error;
    fn try_from(raw: RawFn<Option<usize>>) -> Result<Self> {
        if raw.table.len() != raw.dom {
            return Err(Error::InvalidMorphism(format!(
                "table has {} entries, dom is {}",
                raw.table.len(),
                raw.dom
            )));
        }
        PartialFn::new(raw.cod, raw.table)
    }
}

/// Injectivity and surjectivity of a function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub injective: bool,
    pub surjective: bool,
}

impl FinFn {
    pub fn new(cod: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&v| v >= cod) {
            return Err(Error::InvalidMorphism(format!(
                "value {bad} outside codomain {cod}"
            )));
        }
        Ok(FinFn {
            dom: table.len(),
            cod,
            table,
        })
    }

    pub(crate) fn new_unchecked(cod: usize, table: Vec<usize>) -> Self {
        debug_assert!(table.iter().all(|&v| v < cod));
        FinFn {
            dom: table.len(),
            cod,
            table,
        }
    }

    pub fn identity(n: usize) -> Self {
        FinFn {
            dom: n,
            cod: n,
            table: (0..n).collect(),
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    /// `self ; g`
    pub fn then(&self, g: &FinFn) -> FinFn {
        FinFn::new_unchecked(g.cod, self.table.iter().map(|&i| g.table[i]).collect())
    }

    /// Disjoint union, shifting the second function past the first.
    pub fn tensor(&self, g: &FinFn) -> FinFn {
        let mut table = self.table.clone();
        table.extend(g.table.iter().map(|&v| v + self.cod));
        FinFn::new_unchecked(self.cod + g.cod, table)
    }

    fn hit_counts(&self) -> Vec<usize> {
        let mut hits = vec![0; self.cod];
        for &v in &self.table {
            hits[v] += 1;
        }
        hits
    }

    pub fn classify(&self) -> Classification {
        let hits = self.hit_counts();
        Classification {
            injective: hits.iter().all(|&h| h <= 1),
            surjective: hits.iter().all(|&h| h >= 1),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.classify().injective
    }

    pub fn is_surjective(&self) -> bool {
        self.classify().surjective
    }

    /// Surjection onto the image followed by the inclusion of the image,
    /// which is listed in increasing order.
    pub fn factor_epi_mono(&self) -> (FinFn, FinFn) {
        let hits = self.hit_counts();
        let image: Vec<usize> = (0..self.cod).filter(|&v| hits[v] > 0).collect();
        let mut index = vec![usize::MAX; self.cod];
        for (k, &v) in image.iter().enumerate() {
            index[v] = k;
        }
        let e = FinFn::new_unchecked(image.len(), self.table.iter().map(|&v| index[v]).collect());
        let m = FinFn::new_unchecked(self.cod, image);
        (e, m)
    }

    pub fn to_partial(&self) -> PartialFn {
        PartialFn {
            dom: self.dom,
            cod: self.cod,
            table: self.table.iter().map(|&v| Some(v)).collect(),
        }
    }
}

impl Arrow for FinFn {
    fn dom(&self) -> usize {
        self.dom
    }
    fn cod(&self) -> usize {
        self.cod
    }
}

impl PartialFn {
    pub fn new(cod: usize, table: Vec<Option<usize>>) -> Result<Self> {
        if let Some(bad) = table.iter().flatten().find(|&&v| v >= cod) {
            return Err(Error::InvalidMorphism(format!(
                "value {bad} outside codomain {cod}"
            )));
        }
        Ok(PartialFn {
            dom: table.len(),
            cod,
            table,
        })
    }

    pub(crate) fn new_unchecked(cod: usize, table: Vec<Option<usize>>) -> Self {
        debug_assert!(table.iter().flatten().all(|&v| v < cod));
        PartialFn {
            dom: table.len(),
            cod,
            table,
        }
    }

    pub fn identity(n: usize) -> Self {
        FinFn::identity(n).to_partial()
    }

    pub fn table(&self) -> &[Option<usize>] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.table[i]
    }

    pub fn then(&self, g: &PartialFn) -> PartialFn {
        PartialFn::new_unchecked(
            g.cod,
            self.table
                .iter()
                .map(|v| v.and_then(|i| g.table[i]))
                .collect(),
        )
    }

    pub fn tensor(&self, g: &PartialFn) -> PartialFn {
        let mut table = self.table.clone();
        table.extend(g.table.iter().map(|v| v.map(|x| x + self.cod)));
        PartialFn::new_unchecked(self.cod + g.cod, table)
    }

    pub fn is_total(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    pub fn to_total(&self) -> Option<FinFn> {
        let table: Option<Vec<usize>> = self.table.iter().copied().collect();
        table.map(|t| FinFn::new_unchecked(self.cod, t))
    }

    fn hit_counts(&self) -> Vec<usize> {
        let mut hits = vec![0; self.cod];
        for v in self.table.iter().flatten() {
            hits[*v] += 1;
        }
        hits
    }

    /// Every codomain point is hit by a defined point.
    pub fn is_partial_surjection(&self) -> bool {
        self.hit_counts().iter().all(|&h| h >= 1)
    }

    /// Total and injective.
    pub fn is_injection(&self) -> bool {
        self.is_total() && self.hit_counts().iter().all(|&h| h <= 1)
    }

    /// Partial surjection onto the image of the defined part, then the
    /// (total) inclusion of that image.
    pub fn factor(&self) -> (PartialFn, PartialFn) {
        let hits = self.hit_counts();
        let image: Vec<usize> = (0..self.cod).filter(|&v| hits[v] > 0).collect();
        let mut index = vec![usize::MAX; self.cod];
        for (k, &v) in image.iter().enumerate() {
            index[v] = k;
        }
        let e = PartialFn::new_unchecked(
            image.len(),
            self.table.iter().map(|v| v.map(|x| index[x])).collect(),
        );
        let m = PartialFn::new_unchecked(self.cod, image.into_iter().map(Some).collect());
        (e, m)
    }
}

impl Arrow for PartialFn {
    fn dom(&self) -> usize {
        self.dom
    }
    fn cod(&self) -> usize {
        self.cod
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(cod: usize, t: &[usize]) -> FinFn {
        FinFn::new(cod, t.to_vec()).unwrap()
    }

    #[test]
    fn classification() {
        let c = |x: FinFn| x.classify();
        assert_eq!(
            c(FinFn::identity(2)),
            Classification {
                injective: true,
                surjective: true
            }
        );
        assert_eq!(
            c(f(1, &[0, 0])),
            Classification {
                injective: false,
                surjective: true
            }
        );
        assert_eq!(
            c(f(2, &[1])),
            Classification {
                injective: true,
                surjective: false
            }
        );
    }

    #[test]
    fn tensor_shifts_and_keeps_flags() {
        assert_eq!(
            FinFn::identity(1).tensor(&FinFn::identity(1)),
            FinFn::identity(2)
        );
        let g = f(1, &[0]);
        assert_eq!(g.tensor(&g), f(2, &[0, 1]));
        let h = f(3, &[2, 0]);
        assert_eq!(h.tensor(&h).classify(), h.classify());
    }

    #[test]
    fn epi_mono_examples() {
        assert_eq!(f(2, &[0, 0]).factor_epi_mono(), (f(1, &[0, 0]), f(2, &[0])));
        assert_eq!(
            FinFn::identity(3).factor_epi_mono(),
            (FinFn::identity(3), FinFn::identity(3))
        );
        assert_eq!(
            f(3, &[2, 0]).factor_epi_mono(),
            (f(2, &[1, 0]), f(3, &[0, 2]))
        );
    }

    #[test]
    fn partial_factor_examples() {
        let undefined = PartialFn::new(1, vec![None]).unwrap();
        let (e, m) = undefined.factor();
        assert_eq!(e, PartialFn::new(0, vec![None]).unwrap());
        assert_eq!(m, PartialFn::new(1, vec![]).unwrap());

        let g = PartialFn::new(1, vec![Some(0), None]).unwrap();
        let (e, m) = g.factor();
        assert_eq!(e, g);
        assert_eq!(m, PartialFn::identity(1));

        let total = f(3, &[2, 2, 0]);
        let (e, m) = total.to_partial().factor();
        let (te, tm) = total.factor_epi_mono();
        assert_eq!((e, m), (te.to_partial(), tm.to_partial()));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(FinFn::new(2, vec![2]).is_err());
        assert!(serde_json::from_str::<FinFn>(r#"{"dom":2,"cod":2,"table":[0]}"#).is_err());
        let p: PartialFn = serde_json::from_str(r#"{"dom":2,"cod":1,"table":[0,null]}"#).unwrap();
        assert_eq!(p.apply(1), None);
    }

    fn any_fn() -> impl Strategy<Value = FinFn> {
        (0usize..6, 1usize..6).prop_flat_map(|(n, m)| {
            proptest::collection::vec(0..m, n).prop_map(move |t| FinFn::new(m, t).unwrap())
        })
    }

    proptest! {
        #[test]
        fn factorization_recomposes(g in any_fn()) {
            let (e, m) = g.factor_epi_mono();
            prop_assert!(e.is_surjective());
            prop_assert!(m.is_injective());
            prop_assert_eq!(e.then(&m), g);
        }
    }
}
