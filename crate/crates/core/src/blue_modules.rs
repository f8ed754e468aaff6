//! Finitely generated free blue modules `Bⁿ`, their coproducts and tensor
//! products, and the correspondence between bilinear maps and morphisms out
//! of the tensor product.

use std::collections::{BTreeMap, BTreeSet};

use crate::blueprints::{Blueprint, Decision, FormalSum, Scalar};
use crate::error::{Error, Result};

/// Element of the ambient module `(Bⁿ)⁺`; coordinates are 1-based and zero
/// coefficients are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeModuleElement {
    n: usize,
    coeffs: BTreeMap<usize, FormalSum>,
}

impl FreeModuleElement {
    pub fn zero(n: usize) -> Self {
        FreeModuleElement { n, coeffs: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, i: usize) -> FormalSum {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, FormalSum> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Every coordinate is a single monoid term (or zero).
    pub fn is_product_underlying(&self) -> bool {
        self.coeffs.values().all(|c| c.len() <= 1)
    }
}

/// How the underlying set of a module is assembled from its summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleShape {
    /// `Bⁿ` as a product: the underlying set is `(B^•)ⁿ`.
    Free(usize),
    /// Coproduct: the underlying set is the wedge of the summands'
    /// underlying sets, glued at zero.
    Coproduct(Vec<ModuleShape>),
}

impl ModuleShape {
    fn rank(&self) -> usize {
        match self {
            ModuleShape::Free(n) => *n,
            ModuleShape::Coproduct(parts) => parts.iter().map(ModuleShape::rank).sum(),
        }
    }

    /// Underlying-set test on the coordinate block starting at `offset`.
    fn contains(&self, x: &FreeModuleElement, offset: usize) -> bool {
        match self {
            ModuleShape::Free(n) => (offset + 1..=offset + n).all(|i| x.coeff(i).len() <= 1),
            ModuleShape::Coproduct(parts) => {
                let mut start = offset;
                let mut nonzero_blocks = 0;
                let mut ok = true;
                for part in parts {
                    let r = part.rank();
                    if (start + 1..=start + r).any(|i| x.coeffs.contains_key(&i)) {
                        nonzero_blocks += 1;
                        ok &= part.contains(x, start);
                    }
                    start += r;
                }
                ok && nonzero_blocks <= 1
            }
        }
    }
}

/// Handle on a free module with basis `e₁, …, eₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    inst: Blueprint,
    shape: ModuleShape,
}

/// `Bⁿ` with its canonical basis and componentwise order.
pub fn free_module(inst: &Blueprint, n: usize) -> FreeModule {
    FreeModule { inst: inst.clone(), shape: ModuleShape::Free(n) }
}

/// Coproduct of free modules: bases are concatenated in order.
pub fn direct_sum(modules: &[FreeModule]) -> Result<FreeModule> {
    let Some(first) = modules.first() else {
        return Err(Error::SizeViolation("direct sum of no modules".into()));
    };
    for m in modules {
        if m.inst != first.inst {
            return Err(Error::InstanceMismatch(m.inst.to_string(), first.inst.to_string()));
        }
    }
    Ok(FreeModule {
        inst: first.inst.clone(),
        shape: ModuleShape::Coproduct(modules.iter().map(|m| m.shape.clone()).collect()),
    })
}

impl FreeModule {
    pub fn blueprint(&self) -> &Blueprint {
        &self.inst
    }

    pub fn rank(&self) -> usize {
        self.shape.rank()
    }

    pub fn shape(&self) -> &ModuleShape {
        &self.shape
    }

    /// `eᵢ`, 1-based.
    pub fn basis_element(&self, i: usize) -> Result<FreeModuleElement> {
        self.element([(i, self.inst.natural(1))])
    }

    pub fn basis(&self) -> Vec<FreeModuleElement> {
        (1..=self.rank())
            .map(|i| self.basis_element(i).expect("index in range"))
            .collect()
    }

    /// Builds `Σ cᵢ eᵢ`; repeated indices are added.
    pub fn element<I: IntoIterator<Item = (usize, FormalSum)>>(&self, coeffs: I) -> Result<FreeModuleElement> {
        let n = self.rank();
        let mut map: BTreeMap<usize, FormalSum> = BTreeMap::new();
        for (i, c) in coeffs {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            self.inst.check_sum(&c)?;
            let entry = map.entry(i).or_default();
            *entry = entry.merged(&c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(FreeModuleElement { n, coeffs: map })
    }

    fn check_elem(&self, x: &FreeModuleElement) -> Result<()> {
        if x.n != self.rank() {
            return Err(Error::DimensionMismatch(x.n, self.rank()));
        }
        x.coeffs.values().try_for_each(|c| self.inst.check_sum(c))
    }

    /// Membership in the underlying set `M^•`.
    pub fn is_underlying(&self, x: &FreeModuleElement) -> bool {
        self.check_elem(x).is_ok() && self.shape.contains(x, 0)
    }

    pub fn add(&self, x: &FreeModuleElement, y: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        self.element(x.coeffs.iter().chain(&y.coeffs).map(|(i, c)| (*i, c.clone())))
    }

    pub fn scale(&self, a: &Scalar, x: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.check_elem(x)?;
        self.inst.check(a)?;
        self.element(x.coeffs.iter().map(|(i, c)| (*i, self.inst.scaled(a, c))))
    }

    /// Componentwise order: `x ≤ y` iff `xⱼ ≤ yⱼ` for every coordinate.
    pub fn module_leq(&self, x: &FreeModuleElement, y: &FreeModuleElement) -> Result<Decision> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        let mut out = Decision::Holds;
        for i in 1..=self.rank() {
            out = out.and(self.inst.decide(&x.coeff(i), &y.coeff(i))?);
            if out == Decision::Fails {
                break;
            }
        }
        Ok(out)
    }

    /// Image of an element of the `k`-th summand (0-based) of a coproduct.
    pub fn inject(&self, summand: usize, x: &FreeModuleElement) -> Result<FreeModuleElement> {
        let ModuleShape::Coproduct(parts) = &self.shape else {
            return Err(Error::SizeViolation("not a direct sum".into()));
        };
        let part = parts
            .get(summand)
            .ok_or(Error::IndexOutOfRange { index: summand, n: parts.len() })?;
        if x.n != part.rank() {
            return Err(Error::DimensionMismatch(x.n, part.rank()));
        }
        let offset: usize = parts[..summand].iter().map(ModuleShape::rank).sum();
        self.element(x.coeffs.iter().map(|(i, c)| (i + offset, c.clone())))
    }

    /// `x ⊗ y` in normal form, with `y` taken from `other`.
    pub fn tensor(&self, other: &FreeModule, x: &FreeModuleElement, y: &FreeModuleElement) -> Result<TensorElement> {
        if self.inst != other.inst {
            return Err(Error::InstanceMismatch(other.inst.to_string(), self.inst.to_string()));
        }
        self.check_elem(x)?;
        other.check_elem(y)?;
        let mut coeffs = BTreeMap::new();
        for (i, a) in &x.coeffs {
            for (j, b) in &y.coeffs {
                let c = self.inst.sum_product(a, b);
                if !c.is_zero() {
                    coeffs.insert((*i, *j), c);
                }
            }
        }
        Ok(TensorElement { n: self.rank(), m: other.rank(), coeffs })
    }
}

/// Element of `Bⁿ ⊗ Bᵐ`, written in the basis `eᵢ ⊗ eⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorElement {
    n: usize,
    m: usize,
    coeffs: BTreeMap<(usize, usize), FormalSum>,
}

impl TensorElement {
    pub fn coeff(&self, i: usize, j: usize) -> FormalSum {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), FormalSum> {
        &self.coeffs
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch(self.n * self.m, other.n * other.m));
        }
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            let e = coeffs.entry(*k).or_default();
            *e = e.merged(c);
        }
        Ok(TensorElement { n: self.n, m: self.m, coeffs })
    }
}

/// Componentwise order on tensor coefficients.
pub fn tensor_leq(inst: &Blueprint, x: &TensorElement, y: &TensorElement) -> Result<Decision> {
    if x.dims() != y.dims() {
        return Err(Error::DimensionMismatch(x.n * x.m, y.n * y.m));
    }
    let keys: BTreeSet<_> = x.coeffs.keys().chain(y.coeffs.keys()).copied().collect();
    let mut out = Decision::Holds;
    for (i, j) in keys {
        out = out.and(inst.decide(&x.coeff(i, j), &y.coeff(i, j))?);
    }
    Ok(out)
}

/// A bilinear map `Bⁿ × Bᵐ → Bᵏ`, given by its values on basis pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BilinearMap {
    pub n: usize,
    pub m: usize,
    pub target_rank: usize,
    pub table: BTreeMap<(usize, usize), FreeModuleElement>,
}

/// A morphism `Bⁿ ⊗ Bᵐ → Bᵏ`, given by its images of basis tensors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorMorphism {
    pub n: usize,
    pub m: usize,
    pub target_rank: usize,
    pub images: BTreeMap<(usize, usize), FreeModuleElement>,
}

fn combine(
    inst: &Blueprint,
    target: &FreeModule,
    terms: impl Iterator<Item = (FormalSum, FreeModuleElement)>,
) -> Result<FreeModuleElement> {
    let mut acc = FreeModuleElement::zero(target.rank());
    for (c, v) in terms {
        let scaled = target.element(v.coeffs.iter().map(|(k, d)| (*k, inst.sum_product(&c, d))))?;
        acc = target.add(&acc, &scaled)?;
    }
    Ok(acc)
}

impl BilinearMap {
    /// `φ(x, y) = Σᵢⱼ xᵢ yⱼ φ(eᵢ, eⱼ)`.
    pub fn apply(&self, inst: &Blueprint, x: &FreeModuleElement, y: &FreeModuleElement) -> Result<FreeModuleElement> {
        let target = free_module(inst, self.target_rank);
        combine(
            inst,
            &target,
            self.table.iter().map(|((i, j), v)| (inst.sum_product(&x.coeff(*i), &y.coeff(*j)), v.clone())),
        )
    }

    /// B-bilinear maps send pairs of underlying elements to underlying
    /// elements; on free modules this means single-term table entries.
    pub fn is_blue(&self) -> bool {
        self.table.values().all(FreeModuleElement::is_product_underlying)
    }
}

impl TensorMorphism {
    pub fn apply(&self, inst: &Blueprint, t: &TensorElement) -> Result<FreeModuleElement> {
        let target = free_module(inst, self.target_rank);
        combine(
            inst,
            &target,
            self.images
                .iter()
                .map(|((i, j), v)| (t.coeff(*i, *j), v.clone())),
        )
    }
}

/// `Φ(φ) = φ̄` with `φ̄(x ⊗ y) = φ(x, y)`.
pub fn induced_morphism(phi: &BilinearMap) -> TensorMorphism {
    TensorMorphism {
        n: phi.n,
        m: phi.m,
        target_rank: phi.target_rank,
        images: phi.table.clone(),
    }
}

/// `ζ ↦ ζ̃` with `ζ̃(x, y) = ζ(x ⊗ y)`, read off on basis pairs.
pub fn restriction(inst: &Blueprint, zeta: &TensorMorphism) -> Result<BilinearMap> {
    let left = free_module(inst, zeta.n);
    let right = free_module(inst, zeta.m);
    let mut table = BTreeMap::new();
    for i in 1..=zeta.n {
        for j in 1..=zeta.m {
            let t = left.tensor(&right, &left.basis_element(i)?, &right.basis_element(j)?)?;
            let v = zeta.apply(inst, &t)?;
            if !v.is_zero() {
                table.insert((i, j), v);
            }
        }
    }
    Ok(BilinearMap { n: zeta.n, m: zeta.m, target_rank: zeta.target_rank, table })
}

/// Outcome of [`bilinear_correspondence_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearReport {
    pub maps: usize,
    pub distinct_maps: usize,
    pub distinct_morphisms: usize,
    /// Distinct bilinear maps induce distinct morphisms.
    pub injective: bool,
    /// Every sampled morphism is the image of its own restriction.
    pub surjective: bool,
    /// `φ̄(x ⊗ y) = φ(x, y)` on every probe pair.
    pub factorization_holds: bool,
}

/// Checks `Φ: Bil(Bⁿ × Bᵐ, Bᵏ) → Hom(Bⁿ ⊗ Bᵐ, Bᵏ)` on sampled families.
///
/// Morphisms are compared by their values on every basis tensor and on the
/// tensors of the probe pairs.
pub fn bilinear_correspondence_check(
    inst: &Blueprint,
    n: usize,
    m: usize,
    target_rank: usize,
    maps: &[BilinearMap],
    morphisms: &[TensorMorphism],
    probes: &[(FreeModuleElement, FreeModuleElement)],
) -> Result<BilinearReport> {
    let left = free_module(inst, n);
    let right = free_module(inst, m);
    let mut test_tensors = Vec::new();
    for x in left.basis() {
        for y in right.basis() {
            test_tensors.push(left.tensor(&right, &x, &y)?);
        }
    }
    for (x, y) in probes {
        test_tensors.push(left.tensor(&right, x, y)?);
    }
    let signature = |f: &TensorMorphism| -> Result<Vec<FreeModuleElement>> {
        test_tensors.iter().map(|t| f.apply(inst, t)).collect()
    };

    let distinct_maps: BTreeSet<&BilinearMap> = maps.iter().collect();
    let mut sigs = BTreeSet::new();
    let mut factorization_holds = true;
    for phi in &distinct_maps {
        if phi.n != n || phi.m != m || phi.target_rank != target_rank {
            return Err(Error::DimensionMismatch(phi.n * phi.m, n * m));
        }
        let bar = induced_morphism(phi);
        sigs.insert(signature(&bar)?);
        for (x, y) in probes {
            let direct = phi.apply(inst, x, y)?;
            let via = bar.apply(inst, &left.tensor(&right, x, y)?)?;
            factorization_holds &= direct == via;
        }
    }
    let mut surjective = true;
    for zeta in morphisms {
        let back = induced_morphism(&restriction(inst, zeta)?);
        surjective &= signature(&back)? == signature(zeta)?;
    }
    Ok(BilinearReport {
        maps: maps.len(),
        distinct_maps: distinct_maps.len(),
        distinct_morphisms: sigs.len(),
        injective: sigs.len() == distinct_maps.len(),
        surjective,
        factorization_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_and_underlying_set() {
        let f = Blueprint::f1pm();
        let m = free_module(&f, 3);
        assert_eq!(m.basis().len(), 3);
        let x = m.element([(2, f.monomial(f.eps()).unwrap())]).unwrap();
        assert!(m.is_underlying(&x));
        let y = m.element([(1, f.natural(2))]).unwrap();
        assert!(!m.is_underlying(&y));
        assert!(m.basis_element(4).is_err());
    }

    #[test]
    fn order_is_componentwise() {
        let g2 = Blueprint::gf(2).unwrap();
        let m = free_module(&g2, 2);
        let zero = FreeModuleElement::zero(2);
        let two = m.element([(1, g2.natural(2))]).unwrap();
        let one = m.basis_element(1).unwrap();
        assert_eq!(m.module_leq(&two, &two).unwrap(), Decision::Holds);
        assert_eq!(m.module_leq(&zero, &two).unwrap(), Decision::Holds);
        assert_eq!(m.module_leq(&zero, &one).unwrap(), Decision::Fails);
        let wrong = FreeModuleElement::zero(3);
        assert!(m.module_leq(&wrong, &one).is_err());
    }

    #[test]
    fn tensor_normal_forms() {
        let f = Blueprint::f1pm();
        let m = free_module(&f, 2);
        let (e1, e2) = (m.basis_element(1).unwrap(), m.basis_element(2).unwrap());
        let t = m.tensor(&m, &e1, &e2).unwrap();
        assert_eq!(t.coeffs().len(), 1);
        assert_eq!(t.coeff(1, 2), f.natural(1));
        let left = m.tensor(&m, &m.scale(&f.eps(), &e1).unwrap(), &e2).unwrap();
        let right = m.tensor(&m, &e1, &m.scale(&f.eps(), &e2).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.coeff(1, 2), f.monomial(f.eps()).unwrap());
        let s = m.add(&e1, &e2).unwrap();
        let t = m.tensor(&m, &s, &e1).unwrap();
        assert_eq!(t.coeff(1, 1), f.natural(1));
        assert_eq!(t.coeff(2, 1), f.natural(1));
        assert_eq!(t.coeffs().len(), 2);
    }

    #[test]
    fn direct_sum_reindexes_and_glues_at_zero() {
        let f = Blueprint::f1pm();
        let (a, b) = (free_module(&f, 2), free_module(&f, 3));
        let s = direct_sum(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(s.rank(), 5);
        let img = s.inject(1, &b.basis_element(2).unwrap()).unwrap();
        assert_eq!(img, s.basis_element(4).unwrap());
        assert_eq!(s.inject(0, &FreeModuleElement::zero(2)).unwrap(), FreeModuleElement::zero(5));
        assert_eq!(s.inject(1, &FreeModuleElement::zero(3)).unwrap(), FreeModuleElement::zero(5));
        // an element touching both summands is not in the wedge
        let mixed = s.add(&s.basis_element(1).unwrap(), &s.basis_element(3).unwrap()).unwrap();
        assert!(!s.is_underlying(&mixed));
        assert!(free_module(&f, 5).is_underlying(&mixed));
        let g = Blueprint::gf(3).unwrap();
        assert!(direct_sum(&[a, free_module(&g, 1)]).is_err());
    }

    #[test]
    fn distinct_tables_distinct_morphisms() {
        let g = Blueprint::gf(3).unwrap();
        let target = free_module(&g, 1);
        let e = target.basis_element(1).unwrap();
        let zero_map = BilinearMap { n: 2, m: 2, target_rank: 1, table: BTreeMap::new() };
        let mut table = BTreeMap::new();
        table.insert((1, 2), e.clone());
        let other = BilinearMap { n: 2, m: 2, target_rank: 1, table };
        let zero_mor = induced_morphism(&zero_map);
        let src = free_module(&g, 2);
        let t = src.tensor(&src, &src.basis_element(1).unwrap(), &src.basis_element(2).unwrap()).unwrap();
        assert!(zero_mor.apply(&g, &t).unwrap().is_zero());
        let report = bilinear_correspondence_check(
            &g,
            2,
            2,
            1,
            &[zero_map, other.clone()],
            &[induced_morphism(&other)],
            &[],
        )
        .unwrap();
        assert!(report.injective && report.surjective);
        assert_eq!(report.distinct_morphisms, 2);
    }
}
