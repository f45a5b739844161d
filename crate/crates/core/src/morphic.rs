//! Congruences whose quotient is a group, and the kernel characterisations
//! that go with them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{Element, InvolutionSemigroup};
use crate::subset::Subset;

/// Default bound on the order for partition enumeration (Bell(10) = 115975).
pub const DEFAULT_MAX_ORDER: usize = 10;

/// A partition of the elements compatible with the product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Congruence {
    /// Block id of each element; block ids are assigned in order of first
    /// appearance, so `block[0] = 0`.
    pub block: Vec<usize>,
    pub blocks: usize,
    /// `a ≡ a' ⇒ a* ≡ a'*`.
    pub star_compatible: bool,
}

/// A congruence whose quotient is a group, packaged with the quotient
/// table and the kernel `φ⁻¹(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupQuotient {
    pub congruence: Congruence,
    /// `table[i][j]` is the product of blocks `i` and `j`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    pub kernel: Subset,
}

impl GroupQuotient {
    pub fn order(&self) -> usize {
        self.congruence.blocks
    }

    /// `φ(a) = block of a`.
    pub fn image(&self, a: Element) -> usize {
        self.congruence.block[a]
    }

    /// `φ(a*) = φ(a)⁻¹` for every `a`, checked element by element.
    pub fn maps_star_to_inverse(&self, s: &InvolutionSemigroup) -> bool {
        s.elements()
            .all(|a| self.image(s.star(a)) == self.inverse[self.image(a)])
    }

    /// The quotient table satisfies the group axioms.
    pub fn is_group(&self) -> bool {
        let k = self.order();
        let assoc = (0..k).all(|a| {
            (0..k).all(|b| {
                (0..k).all(|c| self.table[self.table[a][b]][c] == self.table[a][self.table[b][c]])
            })
        });
        assoc
            && (0..k).all(|a| {
                self.table[self.identity][a] == a
                    && self.table[a][self.identity] == a
                    && self.table[a][self.inverse[a]] == self.identity
                    && self.table[self.inverse[a]][a] == self.identity
            })
    }
}

fn is_congruence(s: &InvolutionSemigroup, block: &[usize], reps: &[Element]) -> bool {
    s.elements().all(|a| {
        let r = reps[block[a]];
        s.elements().all(|b| {
            block[s.mult(a, b)] == block[s.mult(r, b)] && block[s.mult(b, a)] == block[s.mult(b, r)]
        })
    })
}

/// Partial check on the first `k + 1` assigned elements.
fn consistent_prefix(s: &InvolutionSemigroup, block: &[usize], reps: &[Element], k: usize) -> bool {
    for a in 0..=k {
        let r = reps[block[a]];
        for b in 0..=k {
            let (ab, rb) = (s.mult(a, b), s.mult(r, b));
            if ab <= k && rb <= k && block[ab] != block[rb] {
                return false;
            }
            let (ba, br) = (s.mult(b, a), s.mult(b, r));
            if ba <= k && br <= k && block[ba] != block[br] {
                return false;
            }
        }
    }
    true
}

fn quotient_as_group(
    s: &InvolutionSemigroup,
    block: &[usize],
    reps: &[Element],
) -> Option<(Vec<Vec<usize>>, usize, Vec<usize>)> {
    let k = reps.len();
    let table: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| block[s.mult(reps[i], reps[j])]).collect())
        .collect();
    let identity = (0..k).find(|&e| (0..k).all(|a| table[e][a] == a && table[a][e] == a))?;
    let mut inverse = Vec::with_capacity(k);
    for a in 0..k {
        inverse.push((0..k).find(|&b| table[a][b] == identity && table[b][a] == identity)?);
    }
    Some((table, identity, inverse))
}

impl InvolutionSemigroup {
    /// All congruences with a group quotient, found by enumerating set
    /// partitions (restricted growth strings) with prefix pruning.
    ///
    /// With `star_compatible` only quotients where `φ(a*) = φ(a)⁻¹` are kept,
    /// i.e. surjective `(∘,*)`-homomorphisms onto groups with inversion.
    /// Output is sorted by quotient order, then by partition.
    pub fn enumerate_group_quotients(
        &self,
        star_compatible: bool,
        max_order: usize,
    ) -> Result<Vec<GroupQuotient>> {
        let n = self.order();
        if n > max_order {
            return Err(Error::TooLarge {
                order: n,
                limit: max_order,
            });
        }
        let mut out = Vec::new();
        let mut block = vec![0usize; n];
        let mut reps: Vec<Element> = Vec::new();
        self.partitions(0, &mut block, &mut reps, &mut |block, reps| {
            if !is_congruence(self, block, reps) {
                return;
            }
            let Some((table, identity, inverse)) = quotient_as_group(self, block, reps) else {
                return;
            };
            let star_ok = self.elements().all(|a| {
                let r = reps[block[a]];
                block[self.star(a)] == block[self.star(r)]
            });
            let kernel =
                Subset::from_indices(n, self.elements().filter(|&a| block[a] == identity)).unwrap();
            let q = GroupQuotient {
                congruence: Congruence {
                    block: block.to_vec(),
                    blocks: reps.len(),
                    star_compatible: star_ok,
                },
                table,
                identity,
                inverse,
                kernel,
            };
            if !star_compatible || q.maps_star_to_inverse(self) {
                out.push(q);
            }
        });
        out.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.congruence.block.cmp(&b.congruence.block))
        });
        Ok(out)
    }

    fn partitions(
        &self,
        k: usize,
        block: &mut Vec<usize>,
        reps: &mut Vec<Element>,
        visit: &mut dyn FnMut(&[usize], &[Element]),
    ) {
        if k == self.order() {
            visit(block, reps);
            return;
        }
        for b in 0..=reps.len() {
            let fresh = b == reps.len();
            if fresh {
                reps.push(k);
            }
            block[k] = b;
            if consistent_prefix(self, block, reps, k) {
                self.partitions(k + 1, block, reps, visit);
            }
            if fresh {
                reps.pop();
            }
        }
    }

    /// The group quotient of largest order (ties broken by enumeration order).
    pub fn greatest_group_quotient(
        &self,
        star_compatible: bool,
        max_order: usize,
    ) -> Result<GroupQuotient> {
        let all = self.enumerate_group_quotients(star_compatible, max_order)?;
        Ok(all
            .into_iter()
            .last()
            .expect("the trivial quotient always exists"))
    }

    /// Evaluates `T closed ∧ T reflexive ∧ H_S ⊆ T` for an involution
    /// subsemigroup `T`.
    pub fn check_kernel_characterization(&self, t: &Subset) -> Result<bool> {
        self.check_universe(t)?;
        if let Some((a, b)) = self.product_violation(t) {
            return Err(Error::NotInvSubsemigroup(format!("{a}·{b} leaves the set")));
        }
        if let Some(a) = self.star_violation(t) {
            return Err(Error::NotInvSubsemigroup(format!(
                "star of {a} leaves the set"
            )));
        }
        let p = self.predicates(t);
        Ok(p.closed && p.reflexive && self.hermitian_squares().is_subset(t))
    }

    /// `H_S ⊆ φ⁻¹(1)`, which decides whether a group quotient map preserves
    /// the involution.
    pub fn check_involution_preservation(&self, q: &GroupQuotient) -> bool {
        self.hermitian_squares().is_subset(&q.kernel)
    }
}
