//! HS-stability.
//!
//! An involution subsemigroup `T ⊆ S` is HS-stable when it contains every
//! hermitian square `xx*` and, for every hermitian square `h`, `xhy ∈ T`
//! forces `xy ∈ T`. This module tests the property two ways (directly and
//! through the three-condition characterisation), computes the generated
//! HS-stable subsemigroup by the closed formula and by independent fixpoint
//! saturation, and builds the witness chains for complex-product problems.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{Element, InvolutionSemigroup};
use crate::subset::Subset;

/// The first reason a subset fails to be HS-stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HsViolation {
    /// `a, b ∈ T` but `ab ∉ T`.
    NotProductClosed { a: Element, b: Element },
    /// `a ∈ T` but `a* ∉ T`.
    NotStarClosed { a: Element },
    /// A hermitian square outside `T` (HS1).
    MissingHermitian { h: Element },
    /// `xhy ∈ T` with `h` hermitian but `xy ∉ T` (HS2).
    Hs2 { x: Element, h: Element, y: Element },
}

impl HsViolation {
    /// True iff the violation is genuine for `t`.
    pub fn holds(&self, s: &InvolutionSemigroup, t: &Subset) -> bool {
        match *self {
            HsViolation::NotProductClosed { a, b } => {
                t.contains(a) && t.contains(b) && !t.contains(s.mult(a, b))
            }
            HsViolation::NotStarClosed { a } => t.contains(a) && !t.contains(s.star(a)),
            HsViolation::MissingHermitian { h } => {
                s.hermitian_squares().contains(h) && !t.contains(h)
            }
            HsViolation::Hs2 { x, h, y } => {
                s.hermitian_squares().contains(h)
                    && t.contains(s.mult(s.mult(x, h), y))
                    && !t.contains(s.mult(x, y))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HsStabilityReport {
    pub stable: bool,
    pub violation: Option<HsViolation>,
}

/// The three conditions characterising HS-stable involution subsemigroups,
/// each with its first counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainConditionsReport {
    /// `(x, q, x·q·x*)` with `q ∈ H_S²` and `x·q·x* ∉ T`.
    pub conjugation: Option<(Element, Element, Element)>,
    /// An element of the symmetric difference of `Tω ∩ S²` and `T ∩ S²`.
    pub closure: Option<Element>,
    /// An element of the symmetric difference of `T \ S²` and `T* \ S²`.
    pub star_outside_square: Option<Element>,
}

impl MainConditionsReport {
    pub fn stable(&self) -> bool {
        self.conjugation.is_none() && self.closure.is_none() && self.star_outside_square.is_none()
    }
}

/// Data for the "proper containment" side of the complex-product criterion:
/// an HS-stable `T ⊊ S'` and anchors `a₁, …, a_{n−1}` with
/// `S₁a₁* ⊆ T`, `a_{i−1}Sᵢaᵢ* ⊆ T` for `1 < i < n` and `a_{n−1}Sₙ ⊆ T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessChain {
    pub t: Subset,
    pub anchors: Vec<Element>,
}

impl WitnessChain {
    /// Re-verifies every defining condition; returns the first failure.
    ///
    /// With a single set (`n = 1`) there are no anchors and the condition is
    /// `S₁ ⊆ T`.
    pub fn verify(
        &self,
        s: &InvolutionSemigroup,
        sets: &[Subset],
        sprime: &Subset,
    ) -> std::result::Result<(), String> {
        let n = sets.len();
        if self.anchors.len() + 1 != n {
            return Err(format!(
                "expected {} anchors, got {}",
                n.saturating_sub(1),
                self.anchors.len()
            ));
        }
        if !s.is_hs_stable(&self.t).stable {
            return Err("T is not HS-stable".into());
        }
        if !self.t.is_proper_subset(sprime) {
            return Err("T is not a proper subset of S'".into());
        }
        let inside = |set: &Subset, what: String| -> std::result::Result<(), String> {
            match set.first_not_in(&self.t) {
                Some(z) => Err(format!("{what} contains {z} outside T")),
                None => Ok(()),
            }
        };
        let single = |a: Element| s.subset([a]).unwrap();
        if n == 1 {
            return inside(&sets[0], "S1".into());
        }
        let a = &self.anchors;
        inside(
            &s.set_product(&sets[0], &single(s.star(a[0]))),
            "S1 a1*".into(),
        )?;
        for i in 1..n - 1 {
            let left = s.set_product(&single(a[i - 1]), &sets[i]);
            inside(
                &s.set_product(&left, &single(s.star(a[i]))),
                format!("a{} S{} a{}*", i, i + 1, i + 1),
            )?;
        }
        inside(
            &s.set_product(&single(a[n - 2]), &sets[n - 1]),
            format!("a{} S{}", n - 1, n),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ProblemOutcome {
    /// The generated HS-stable subsemigroup equals `S'`.
    Equal { generated: Subset },
    /// It is not contained in `S'` at all.
    NotContained { generated: Subset },
    /// It is properly contained in `S'`; the chain certifies this.
    Proper {
        generated: Subset,
        witness: WitnessChain,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetWitness {
    pub representative: Element,
    pub subgroup: Subset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetCriterion {
    /// `⟨A⁻¹A⟩`.
    pub inner: Subset,
    /// `⟨A⟩`.
    pub generated: Subset,
    pub equal: bool,
    pub coset: Option<CosetWitness>,
}

fn check_nonempty(sets: &[Subset]) -> Result<()> {
    if sets.is_empty() {
        return Err(Error::EmptyList);
    }
    if let Some(i) = sets.iter().position(Subset::is_empty) {
        return Err(Error::EmptyInput(i));
    }
    Ok(())
}

impl InvolutionSemigroup {
    /// Tests HS-stability from the definition. Checks run in the order
    /// product closure, star closure, HS1, HS2; the first failure is reported.
    pub fn is_hs_stable(&self, t: &Subset) -> HsStabilityReport {
        let violation = self.hs_violation(t);
        HsStabilityReport {
            stable: violation.is_none(),
            violation,
        }
    }

    fn hs_violation(&self, t: &Subset) -> Option<HsViolation> {
        if let Some((a, b)) = self.product_violation(t) {
            return Some(HsViolation::NotProductClosed { a, b });
        }
        if let Some(a) = self.star_violation(t) {
            return Some(HsViolation::NotStarClosed { a });
        }
        let hermitian = self.hermitian_squares();
        if let Some(h) = hermitian.first_not_in(t) {
            return Some(HsViolation::MissingHermitian { h });
        }
        for x in self.elements() {
            for h in hermitian {
                let xh = self.mult(x, h);
                for y in self.elements() {
                    if t.contains(self.mult(xh, y)) && !t.contains(self.mult(x, y)) {
                        return Some(HsViolation::Hs2 { x, h, y });
                    }
                }
            }
        }
        None
    }

    /// Evaluates the three-condition characterisation literally:
    /// `xH_S²x* ⊆ T` for all `x`, `Tω ∩ S² = T ∩ S²`, `T \ S² = T* \ S²`.
    pub fn hs_main_conditions(&self, t: &Subset) -> MainConditionsReport {
        let mut conjugation = None;
        'outer: for x in self.elements() {
            let xs = self.star(x);
            for q in self.hermitian_pairs() {
                let v = self.mult(self.mult(x, q), xs);
                if !t.contains(v) {
                    conjugation = Some((x, q, v));
                    break 'outer;
                }
            }
        }
        let sq = self.square_set();
        let lhs = self.omega(t).intersection(sq);
        let rhs = t.intersection(sq);
        let closure = lhs.first_not_in(&rhs).or_else(|| rhs.first_not_in(&lhs));
        let out = t.difference(sq);
        let out_star = self.star_set(t).difference(sq);
        let star_outside_square = out
            .first_not_in(&out_star)
            .or_else(|| out_star.first_not_in(&out));
        MainConditionsReport {
            conjugation,
            closure,
            star_outside_square,
        }
    }

    /// Same verdict as [`is_hs_stable`](Self::is_hs_stable), computed through
    /// the three-condition characterisation.
    pub fn is_hs_stable_via_main(&self, t: &Subset) -> MainConditionsReport {
        self.hs_main_conditions(t)
    }

    /// `(⟨A ∪ ⋃ₓ xH_S²x*⟩ω ∩ S²) ∪ ((A ∪ A*) \ S²)`, evaluated as written.
    pub fn gen_hs_formula(&self, a: &Subset) -> Subset {
        let seed = a.union(self.conjugated_hermitian_pairs());
        let closed = self.omega(&self.gen_inv_subsemigroup(&seed));
        let sq = self.square_set();
        closed
            .intersection(sq)
            .union(&a.union(&self.star_set(a)).difference(sq))
    }

    /// Least HS-stable involution subsemigroup containing `A`, by saturation:
    /// start from `A ∪ H_S` and close under product, star and the HS2 rule
    /// (`xhy` in the set ⇒ add `xy`) until nothing changes.
    pub fn gen_hs_oracle(&self, a: &Subset) -> Subset {
        let hermitian: Vec<Element> = self.hermitian_squares().iter().collect();
        let mut cur = a.union(self.hermitian_squares());
        loop {
            cur = self.gen_inv_subsemigroup(&cur);
            let mut changed = false;
            for x in self.elements() {
                for &h in &hermitian {
                    let xh = self.mult(x, h);
                    for y in self.elements() {
                        if cur.contains(self.mult(xh, y)) && cur.insert(self.mult(x, y)) {
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    /// True iff the least HS-stable involution subsemigroup is all of `S`.
    pub fn is_hs_simple(&self) -> bool {
        self.gen_hs_formula(&self.empty_set()).is_full()
    }

    /// All HS-stable involution subsemigroups, as the distinct values of the
    /// generated-HS map over every subset. Requires `2^order ≤ cap`.
    pub fn enumerate_hs_stable(&self, cap: u64) -> Result<Vec<Subset>> {
        let n = self.order();
        if n >= 63 || (1u64 << n) > cap {
            return Err(Error::TooLarge {
                order: n,
                limit: cap.checked_ilog2().unwrap_or(0) as usize,
            });
        }
        let found: BTreeSet<Subset> = (0..1u64 << n)
            .into_par_iter()
            .map(|mask| self.gen_hs_formula(&Subset::from_mask(n, mask)))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        Ok(found.into_iter().collect())
    }

    fn check_problem_inputs(&self, sets: &[Subset], sprime: &Subset) -> Result<()> {
        check_nonempty(sets)?;
        for s in sets {
            self.check_universe(s)?;
        }
        self.check_universe(sprime)?;
        if let Some((a, b)) = self.product_violation(sprime) {
            return Err(Error::NotSubsemigroup(format!(
                "S' contains {a} and {b} but not their product"
            )));
        }
        if let Some(a) = self.star_violation(sprime) {
            return Err(Error::NotSubsemigroup(format!(
                "S' contains {a} but not its star"
            )));
        }
        Ok(())
    }

    /// Compares `⟨S₁⋯Sₙ⟩_HS` with `S'`. When the containment is proper the
    /// witness is `T = ⟨S₁⋯Sₙ⟩_HS` with `aᵢ = x₁⋯xᵢ`, `xᵢ` the least member of
    /// `Sᵢ`; the chain is re-verified before it is returned.
    pub fn check_problem(&self, sets: &[Subset], sprime: &Subset) -> Result<ProblemOutcome> {
        self.check_problem_inputs(sets, sprime)?;
        let generated = self.gen_hs_formula(&self.complex_product(sets)?);
        if generated == *sprime {
            return Ok(ProblemOutcome::Equal { generated });
        }
        if !generated.is_subset(sprime) {
            return Ok(ProblemOutcome::NotContained { generated });
        }
        let picks: Vec<Element> = sets.iter().map(|s| s.first().unwrap()).collect();
        let mut anchors = Vec::with_capacity(sets.len() - 1);
        for i in 0..sets.len() - 1 {
            anchors.push(self.mult_all(&picks[..=i]));
        }
        let witness = WitnessChain {
            t: generated.clone(),
            anchors,
        };
        if let Err(why) = witness.verify(self, sets, sprime) {
            panic!("constructed witness chain failed verification: {why}");
        }
        Ok(ProblemOutcome::Proper { generated, witness })
    }

    /// Exhaustive search over all HS-stable `T ⊊ S'` and all anchor tuples.
    /// Only for order ≤ 8 and at most 10⁶ anchor tuples.
    pub fn search_witness(&self, sets: &[Subset], sprime: &Subset) -> Result<Option<WitnessChain>> {
        self.check_problem_inputs(sets, sprime)?;
        let n = self.order();
        if n > 8 {
            return Err(Error::TooLarge { order: n, limit: 8 });
        }
        let slots = sets.len() - 1;
        let tuples = (n as u64)
            .checked_pow(slots as u32)
            .filter(|&c| c <= 1_000_000);
        let Some(tuples) = tuples else {
            return Err(Error::TooLarge { order: n, limit: 8 });
        };
        for t in self.enumerate_hs_stable(1 << 8)? {
            if !t.is_proper_subset(sprime) {
                continue;
            }
            for code in 0..tuples {
                let mut c = code;
                let anchors = (0..slots)
                    .map(|_| {
                        let v = (c % n as u64) as usize;
                        c /= n as u64;
                        v
                    })
                    .collect();
                let w = WitnessChain {
                    t: t.clone(),
                    anchors,
                };
                if w.verify(self, sets, sprime).is_ok() {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    /// Decides `⟨A⁻¹A⟩ = ⟨A⟩` in a group; when they differ, exhibits
    /// `A ⊆ gG'` with `g ∈ A` and `G' = ⟨A⁻¹A⟩ ⊊ ⟨A⟩`.
    pub fn check_coset_criterion(&self, a: &Subset) -> Result<CosetCriterion> {
        self.check_group()?;
        self.check_universe(a)?;
        if a.is_empty() {
            return Err(Error::EmptyInput(0));
        }
        let inner = self.gen_inv_subsemigroup(&self.set_product(&self.star_set(a), a));
        let generated = self.gen_inv_subsemigroup(a);
        let equal = inner == generated;
        let coset = (!equal).then(|| {
            let g = a.first().unwrap();
            let coset = self.set_product(&self.subset([g]).unwrap(), &inner);
            assert!(a.is_subset(&coset) && inner.is_proper_subset(&generated));
            CosetWitness {
                representative: g,
                subgroup: inner.clone(),
            }
        });
        Ok(CosetCriterion {
            inner,
            generated,
            equal,
            coset,
        })
    }

    /// `S₁⋯S_k S_k*⋯S₁* ⊆ ⟨S₁⋯Sₙ⟩_HS`.
    pub fn specialform_check(&self, sets: &[Subset], k: usize) -> Result<bool> {
        check_nonempty(sets)?;
        if k == 0 || k > sets.len() {
            return Err(Error::BadIndex { k, n: sets.len() });
        }
        let mut word: Vec<Subset> = sets[..k].to_vec();
        word.extend(sets[..k].iter().rev().map(|s| self.star_set(s)));
        let lhs = self.complex_product(&word)?;
        let rhs = self.gen_hs_formula(&self.complex_product(sets)?);
        Ok(lhs.is_subset(&rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    /// Independent subgroup enumerator: a nonempty subset of a finite group
    /// closed under products is a subgroup.
    fn subgroups(s: &InvolutionSemigroup) -> Vec<Subset> {
        let n = s.order();
        let mut out: Vec<Subset> = (1..1u64 << n)
            .map(|m| Subset::from_mask(n, m))
            .filter(|t| t.iter().all(|a| t.iter().all(|b| t.contains(s.mult(a, b)))))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn subgroups_are_hs_stable() {
        let g = symmetric_group(3);
        for t in subgroups(&g.semigroup) {
            assert!(g.semigroup.is_hs_stable(&t).stable);
        }
        assert!(g.semigroup.is_hs_stable(&g.semigroup.full_set()).stable);
    }

    #[test]
    fn s3_stable_sets_are_its_six_subgroups() {
        let g = symmetric_group(3);
        let found = g.semigroup.enumerate_hs_stable(1 << 16).unwrap();
        assert_eq!(found.len(), 6);
        assert_eq!(found, subgroups(&g.semigroup));
    }

    #[test]
    fn enumeration_guard() {
        let g = symmetric_group(4);
        assert!(matches!(
            g.semigroup.enumerate_hs_stable(1 << 16),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn semilattice_has_only_itself() {
        let s = chain_semilattice(3);
        assert_eq!(s.enumerate_hs_stable(1 << 16).unwrap(), vec![s.full_set()]);
        assert_eq!(s.gen_hs_formula(&s.empty_set()), s.full_set());
        assert!(s.is_hs_simple());
    }

    #[test]
    fn zero_semigroup_stable_sets() {
        let z = zero_semigroup(3, &[0, 1, 2]).unwrap();
        let expect: Vec<Subset> = [vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 2]]
            .into_iter()
            .map(|v| z.subset(v).unwrap())
            .collect();
        let mut got = z.enumerate_hs_stable(1 << 16).unwrap();
        got.sort();
        let mut want = expect.clone();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(
            z.gen_hs_formula(&z.subset([1]).unwrap()),
            z.subset([0, 1]).unwrap()
        );
        assert!(!z.is_hs_simple());
    }

    #[test]
    fn zero_semigroup_via_main() {
        let z = zero_semigroup(3, &[0, 1, 2]).unwrap();
        let t = z.subset([0, 1]).unwrap();
        let r = z.is_hs_stable_via_main(&t);
        assert!(r.stable(), "{r:?}");
        // drop the zero: x·H²·x* = {0} is no longer inside
        let r = z.is_hs_stable_via_main(&z.subset([1]).unwrap());
        assert_eq!(r.conjugation, Some((0, 0, 0)));
    }

    #[test]
    fn cyclic_subgroup_via_main() {
        let g = symmetric_group(3);
        let c = g.index_of_cycles(&[&[1, 2, 3]]);
        let t = g.semigroup.gen_inv_subsemigroup(&g.subset([c]).unwrap());
        assert!(g.semigroup.is_hs_stable_via_main(&t).stable());
    }

    #[test]
    fn generated_in_group_is_cyclic_subgroup() {
        let g = symmetric_group(4);
        let s = &g.semigroup;
        for x in s.elements() {
            let a = s.subset([x]).unwrap();
            let cyclic = s.gen_subsemigroup(&a);
            assert_eq!(s.gen_hs_formula(&a), cyclic);
            assert_eq!(s.gen_hs_oracle(&a), cyclic);
        }
        assert_eq!(s.gen_hs_oracle(&s.full_set()), s.full_set());
    }

    #[test]
    fn violation_reports_are_genuine() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        for mask in 0..64u64 {
            let t = Subset::from_mask(6, mask);
            let r = s.is_hs_stable(&t);
            if let Some(v) = r.violation {
                assert!(v.holds(s, &t), "{v:?} on {t}");
            }
        }
    }

    #[test]
    fn rees_generated_from_empty_leaves_omega_of_idempotents() {
        let ex = rees_example();
        let s = ex.semigroup();
        let min = s.gen_hs_oracle(&s.empty_set());
        let xax = ex.group.index_of_cycles(&[&[2, 3]]);
        assert!(min.contains(ex.elem(1, xax, 1)));
        let e_omega = s.omega(&s.gen_inv_subsemigroup(s.idempotents()));
        assert!(!e_omega.contains(ex.elem(1, xax, 1)));
        let r = s.is_hs_stable(&e_omega);
        assert!(!r.stable);
        assert!(r.violation.unwrap().holds(s, &e_omega));
    }

    #[test]
    fn transposition_problem_in_s3() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let transpositions = s.subset((0..6).filter(|&x| !g.is_even(x))).unwrap();
        let evens = s.subset((0..6).filter(|&x| g.is_even(x))).unwrap();
        let sets = [s.star_set(&transpositions), transpositions.clone()];
        let sprime = s.gen_inv_subsemigroup(&transpositions);
        assert!(sprime.is_full());
        match s.check_problem(&sets, &sprime).unwrap() {
            ProblemOutcome::Proper { generated, witness } => {
                assert_eq!(generated, evens);
                assert_eq!(witness.t, evens);
                assert_eq!(witness.anchors.len(), 1);
                assert!(witness.verify(s, &sets, &sprime).is_ok());
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn problem_equal_and_errors() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let e = s.subset([0]).unwrap();
        assert!(matches!(
            s.check_problem(&[e.clone(), e.clone()], &e).unwrap(),
            ProblemOutcome::Equal { .. }
        ));
        assert!(matches!(
            s.check_problem(&[e.clone(), s.empty_set()], &e),
            Err(Error::EmptyInput(1))
        ));
        let not_closed = s.subset([g.index_of_cycles(&[&[1, 2, 3]])]).unwrap();
        assert!(matches!(
            s.check_problem(std::slice::from_ref(&e), &not_closed),
            Err(Error::NotSubsemigroup(_))
        ));
        let y = chain_semilattice(4);
        let sets = [
            y.subset([1, 3]).unwrap(),
            y.subset([2]).unwrap(),
            y.subset([0, 3]).unwrap(),
        ];
        assert!(matches!(
            y.check_problem(&sets, &y.full_set()).unwrap(),
            ProblemOutcome::Equal { .. }
        ));
    }

    #[test]
    fn exhaustive_witness_search_agrees_on_s3() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let n = s.order();
        let subgroups = subgroups(s);
        for m1 in 1..1u64 << n {
            for m2 in [1u64, 6, 7, 24, 63] {
                let sets = [Subset::from_mask(n, m1), Subset::from_mask(n, m2)];
                for sprime in &subgroups {
                    let proper = matches!(
                        s.check_problem(&sets, sprime).unwrap(),
                        ProblemOutcome::Proper { .. }
                    );
                    let found = s.search_witness(&sets, sprime).unwrap();
                    assert_eq!(proper, found.is_some(), "sets {sets:?} S' {sprime}");
                }
            }
        }
    }

    #[test]
    fn coset_criterion() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let id = s.subset([0]).unwrap();
        assert!(s.check_coset_criterion(&id).unwrap().equal);
        let t = s.subset([0, g.index_of_cycles(&[&[1, 2]])]).unwrap();
        assert!(s.check_coset_criterion(&t).unwrap().equal);
        let odd = s.subset((0..6).filter(|&x| !g.is_even(x))).unwrap();
        let c = s.check_coset_criterion(&odd).unwrap();
        assert!(!c.equal);
        assert_eq!(
            c.coset.unwrap().subgroup,
            s.subset((0..6).filter(|&x| g.is_even(x))).unwrap()
        );
        assert!(matches!(
            chain_semilattice(2).check_coset_criterion(&Subset::full(2)),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn specialform_examples() {
        let b = rectangular_band(2);
        assert!(b
            .specialform_check(&[b.subset([1]).unwrap(), b.subset([2]).unwrap()], 1)
            .unwrap());
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let tr = s.subset((0..6).filter(|&x| !g.is_even(x))).unwrap();
        for k in 1..=2 {
            assert!(s.specialform_check(&[tr.clone(), tr.clone()], k).unwrap());
        }
        assert!(matches!(
            s.specialform_check(std::slice::from_ref(&tr), 2),
            Err(Error::BadIndex { .. })
        ));
    }
}
