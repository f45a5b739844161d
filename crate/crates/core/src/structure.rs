//! Class predicates and the specialised descriptions of HS-stability for
//! regular *-semigroups, commutative involution semigroups and semilattices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{Element, InvolutionSemigroup};
use crate::subset::Subset;

/// Structural facts about an involution semigroup.
///
/// `inverse` means an inverse *-semigroup: regular *-semigroup in which every
/// element has exactly one inverse (so the star is that inverse).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub order: usize,
    pub regular_star: bool,
    pub orthodox_star: bool,
    pub inverse: bool,
    pub group: bool,
    pub commutative: bool,
    pub trivial_involution: bool,
    pub semilattice: bool,
    pub band: bool,
    pub monoid: bool,
    pub has_zero: bool,
    pub identity: Option<Element>,
    pub zero: Option<Element>,
    pub square_is_whole: bool,
}

/// Parts of the hermitian-square/idempotent lemma for regular *-semigroups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeLemmaReport {
    /// `H_S = {e ∈ E_S | e* = e}`.
    pub hermitian_are_projections: bool,
    /// `H_S = E_S ⟺ S inverse`.
    pub hermitian_all_iff_inverse: bool,
    /// `H_S² = E_S`.
    pub hermitian_pairs_are_idempotents: bool,
    /// `x e x* ∈ E_S` for all `x`, `e ∈ E_S`; only evaluated when orthodox.
    pub conjugates_idempotent: Option<bool>,
}

impl HeLemmaReport {
    pub fn holds(&self) -> bool {
        self.hermitian_are_projections
            && self.hermitian_all_iff_inverse
            && self.hermitian_pairs_are_idempotents
            && self.conjugates_idempotent.unwrap_or(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseSimplicity {
    pub simple: bool,
    /// For each `x`, an idempotent `e` with `e = xe = ex`, if any.
    pub witnesses: Vec<Option<Element>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutativeTheoremReport {
    /// `T` is HS-stable.
    pub stable: bool,
    /// `H_S ⊆ T`, `T \ S² = T* \ S²` and `Tω ∩ S² = T ∩ S²`.
    pub conditions: bool,
    /// `T = φ⁻¹(1)` for some surjective `(∘,*)`-homomorphism onto a group;
    /// `None` when the order exceeds the congruence enumeration bound.
    pub kernel: Option<bool>,
}

impl CommutativeTheoremReport {
    pub fn agree(&self) -> bool {
        self.stable == self.conditions && self.kernel.is_none_or(|k| k == self.stable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemilatticeCriterion {
    /// `⟨⟨A₁ ∪ ⋯ ∪ Aₙ⟩⟩ = ⟨⟨A₁⋯Aₙ⟩⟩`, computed by generation.
    pub generated_equal: bool,
    /// Every `αᵢ ∈ Aᵢ` lies below some `βⱼ ∈ Aⱼ`, for all `i`, `j`.
    pub dominated: bool,
    /// First `(i, αᵢ, j)` (1-based `i`, `j`) with no `βⱼ ∈ Aⱼ` above `αᵢ`.
    pub witness: Option<(usize, Element, usize)>,
}

impl InvolutionSemigroup {
    /// `V(x)`, the inverses of `x`.
    pub fn inverses_of(&self, x: Element) -> Vec<Element> {
        self.elements()
            .filter(|&y| self.mult(self.mult(x, y), x) == x && self.mult(self.mult(y, x), y) == y)
            .collect()
    }

    pub fn is_regular_star(&self) -> bool {
        self.regular_star_violation().is_none()
    }

    fn regular_star_violation(&self) -> Option<Element> {
        self.elements()
            .find(|&x| self.mult(self.mult(x, self.star(x)), x) != x)
    }

    fn require_regular_star(&self) -> Result<()> {
        match self.regular_star_violation() {
            Some(x) => Err(Error::NotRegularStar(x)),
            None => Ok(()),
        }
    }

    pub fn classify(&self) -> ClassReport {
        let regular_star = self.is_regular_star();
        let e = self.idempotents();
        let orthodox_star = regular_star && self.is_subsemigroup(e);
        let inverse = regular_star && self.elements().all(|x| self.inverses_of(x).len() == 1);
        let commutative = self.is_commutative();
        let band = e.is_full();
        let identity = self.identity();
        let zero = self.zero();
        ClassReport {
            order: self.order(),
            regular_star,
            orthodox_star,
            inverse,
            group: self.check_group().is_ok(),
            commutative,
            trivial_involution: self.elements().all(|x| self.star(x) == x),
            semilattice: commutative && band,
            band,
            monoid: identity.is_some(),
            has_zero: zero.is_some(),
            identity,
            zero,
            square_is_whole: self.square_set().is_full(),
        }
    }

    /// `F_S = {x e x* | x ∈ S, e ∈ E_S}`.
    pub fn f_set(&self) -> Subset {
        let mut out = self.empty_set();
        for x in self.elements() {
            let xs = self.star(x);
            for e in self.idempotents() {
                out.insert(self.mult(self.mult(x, e), xs));
            }
        }
        out
    }

    pub fn check_he_lemma(&self) -> Result<HeLemmaReport> {
        self.require_regular_star()?;
        let class = self.classify();
        let h = self.hermitian_squares();
        let e = self.idempotents();
        let projections =
            Subset::from_indices(self.order(), e.iter().filter(|&x| self.star(x) == x)).unwrap();
        let conjugates_idempotent = class.orthodox_star.then(|| {
            self.elements().all(|x| {
                e.iter()
                    .all(|f| e.contains(self.mult(self.mult(x, f), self.star(x))))
            })
        });
        Ok(HeLemmaReport {
            hermitian_are_projections: *h == projections,
            hermitian_all_iff_inverse: (h == e) == class.inverse,
            hermitian_pairs_are_idempotents: self.hermitian_pairs() == e,
            conjugates_idempotent,
        })
    }

    /// `⟨T ∪ F_S⟩ω` in a regular *-semigroup.
    pub fn gen_hs_regular(&self, t: &Subset) -> Result<Subset> {
        self.require_regular_star()?;
        Ok(self.omega(&self.gen_inv_subsemigroup(&t.union(&self.f_set()))))
    }

    /// `⟨T ∪ E_S⟩ω` in an orthodox *-semigroup.
    pub fn gen_hs_orthodox(&self, t: &Subset) -> Result<Subset> {
        if !self.classify().orthodox_star {
            return Err(Error::NotOrthodox);
        }
        Ok(self.omega(&self.gen_inv_subsemigroup(&t.union(self.idempotents()))))
    }

    /// `E_S = E_S ω`.
    pub fn is_e_unitary(&self) -> bool {
        self.omega(self.idempotents()) == *self.idempotents()
    }

    /// Checks that every `x` has an idempotent `e` with `e = xe = ex`.
    pub fn inverse_hs_simplicity(&self) -> Result<InverseSimplicity> {
        if !self.classify().inverse {
            return Err(Error::NotInverse);
        }
        let witnesses: Vec<Option<Element>> = self
            .elements()
            .map(|x| {
                self.idempotents()
                    .iter()
                    .find(|&e| self.mult(x, e) == e && self.mult(e, x) == e)
            })
            .collect();
        Ok(InverseSimplicity {
            simple: witnesses.iter().all(Option::is_some),
            witnesses,
        })
    }

    /// Evaluates the three legs of the commutative description of
    /// HS-stability: stability, the three set conditions, and being a group
    /// quotient kernel (only when `order ≤ max_order`).
    pub fn check_commutative_theorem(
        &self,
        t: &Subset,
        max_order: usize,
    ) -> Result<CommutativeTheoremReport> {
        if let Some((a, b)) = self.commutativity_violation() {
            return Err(Error::NotCommutative { a, b });
        }
        self.check_universe(t)?;
        let stable = self.is_hs_stable(t).stable;
        let sq = self.square_set();
        let conditions = self.hermitian_squares().is_subset(t)
            && t.difference(sq) == self.star_set(t).difference(sq)
            && self.omega(t).intersection(sq) == t.intersection(sq);
        let kernel = if self.order() <= max_order {
            let qs = self.enumerate_group_quotients(true, max_order)?;
            Some(qs.iter().any(|q| q.kernel == *t))
        } else {
            None
        };
        Ok(CommutativeTheoremReport {
            stable,
            conditions,
            kernel,
        })
    }

    /// `(⟨A ∪ H_S⟩ω ∩ S²) ∪ ((A ∪ A*) \ S²)` in a commutative semigroup.
    pub fn gen_hs_commutative(&self, a: &Subset) -> Result<Subset> {
        if let Some((x, y)) = self.commutativity_violation() {
            return Err(Error::NotCommutative { a: x, b: y });
        }
        let sq = self.square_set();
        let closed = self.omega(&self.gen_inv_subsemigroup(&a.union(self.hermitian_squares())));
        Ok(closed
            .intersection(sq)
            .union(&a.union(&self.star_set(a)).difference(sq)))
    }

    /// `x ≤ y ⟺ xy = x`.
    pub fn below(&self, x: Element, y: Element) -> bool {
        self.mult(x, y) == x
    }

    /// Compares the subsemilattices generated by the union and by the complex
    /// product, and independently evaluates the domination condition.
    pub fn semilattice_product_criterion(&self, sets: &[Subset]) -> Result<SemilatticeCriterion> {
        let class = self.classify();
        if !class.semilattice {
            return Err(Error::NotSemilattice(if class.commutative {
                "not every element is idempotent".into()
            } else {
                "not commutative".into()
            }));
        }
        if sets.is_empty() {
            return Err(Error::EmptyList);
        }
        if let Some(i) = sets.iter().position(Subset::is_empty) {
            return Err(Error::EmptyInput(i));
        }
        let union = sets
            .iter()
            .skip(1)
            .fold(sets[0].clone(), |acc, s| acc.union(s));
        let generated_equal =
            self.gen_subsemigroup(&union) == self.gen_subsemigroup(&self.complex_product(sets)?);
        let mut witness = None;
        'outer: for (i, ai) in sets.iter().enumerate() {
            for alpha in ai {
                for (j, aj) in sets.iter().enumerate() {
                    if !aj.iter().any(|beta| self.below(alpha, beta)) {
                        witness = Some((i + 1, alpha, j + 1));
                        break 'outer;
                    }
                }
            }
        }
        Ok(SemilatticeCriterion {
            generated_equal,
            dominated: witness.is_none(),
            witness,
        })
    }
}
