//! The ω operator, generated subsemigroups, and the full/closed/reflexive/dense
//! subset predicates.

use serde::Serialize;

use crate::semigroup::{Element, ElementTerm, InvolutionSemigroup};
use crate::subset::Subset;

impl InvolutionSemigroup {
    /// `Tω = {s ∈ S | ∃t ∈ T: st ∈ T}`, applied exactly once.
    pub fn omega(&self, t: &Subset) -> Subset {
        let members: Vec<_> = t.iter().collect();
        let mut out = self.empty_set();
        for s in self.elements() {
            if members.iter().any(|&m| t.contains(self.mult(s, m))) {
                out.insert(s);
            }
        }
        out
    }

    /// `⟨⟨A⟩⟩`, the subsemigroup generated by `A`.
    pub fn gen_subsemigroup(&self, a: &Subset) -> Subset {
        self.saturate(a, false)
    }

    /// `⟨A⟩`, the involution subsemigroup generated by `A`.
    pub fn gen_inv_subsemigroup(&self, a: &Subset) -> Subset {
        self.saturate(a, true)
    }

    fn saturate(&self, a: &Subset, with_star: bool) -> Subset {
        let mut set = a.clone();
        let mut members: Vec<Element> = Vec::with_capacity(self.order());
        let mut queue: Vec<Element> = a.iter().collect();
        if with_star {
            for x in a {
                if set.insert(self.star(x)) {
                    queue.push(self.star(x));
                }
            }
        }
        // every pair of members is multiplied once: when the later of the two
        // is popped from the queue
        while let Some(x) = queue.pop() {
            members.push(x);
            for i in 0..members.len() {
                let y = members[i];
                for p in [self.mult(x, y), self.mult(y, x)] {
                    if set.insert(p) {
                        queue.push(p);
                        if with_star {
                            let ps = self.star(p);
                            if set.insert(ps) {
                                queue.push(ps);
                            }
                        }
                    }
                }
            }
        }
        set
    }

    /// `⟨A⟩` together with, for each member, a word over `A` (letters possibly
    /// starred) that evaluates to it. Indexed by element; `None` off the set.
    pub fn gen_inv_subsemigroup_traced(&self, a: &Subset) -> Vec<Option<ElementTerm>> {
        let mut terms: Vec<Option<ElementTerm>> = vec![None; self.order()];
        let mut queue = Vec::new();
        for g in a {
            terms[g] = Some(ElementTerm::generator(g));
            queue.push(g);
        }
        for g in a {
            let gs = self.star(g);
            if terms[gs].is_none() {
                terms[gs] = Some(ElementTerm::generator(g).starred(gs));
                queue.push(gs);
            }
        }
        let mut members = Vec::new();
        while let Some(x) = queue.pop() {
            members.push(x);
            for i in 0..members.len() {
                let y = members[i];
                for (l, r) in [(x, y), (y, x)] {
                    let p = self.mult(l, r);
                    if terms[p].is_some() {
                        continue;
                    }
                    let (tl, tr) = (terms[l].as_ref().unwrap(), terms[r].as_ref().unwrap());
                    let term = tl.concat(tr, p);
                    let ps = self.star(p);
                    if terms[ps].is_none() && ps != p {
                        terms[ps] = Some(term.starred(ps));
                        queue.push(ps);
                    }
                    terms[p] = Some(term);
                    queue.push(p);
                }
            }
        }
        terms
    }

    /// Evaluates full/closed/reflexive/dense by their definitions.
    pub fn predicates(&self, t: &Subset) -> SubsetPredicateReport {
        let full = self.idempotents().first_not_in(t);

        let om = self.omega(t);
        let closed = if om == *t {
            None
        } else {
            Some(
                om.first_not_in(t)
                    .or_else(|| t.first_not_in(&om))
                    .expect("sets differ"),
            )
        };

        let mut reflexive = None;
        'outer: for a in self.elements() {
            for b in self.elements() {
                if t.contains(self.mult(a, b)) && !t.contains(self.mult(b, a)) {
                    reflexive = Some((a, b));
                    break 'outer;
                }
            }
        }

        let dense = self.elements().find(|&s| {
            let right = self.elements().any(|x| t.contains(self.mult(s, x)));
            let left = self.elements().any(|y| t.contains(self.mult(y, s)));
            !(right && left)
        });

        SubsetPredicateReport {
            full: full.is_none(),
            closed: closed.is_none(),
            reflexive: reflexive.is_none(),
            dense: dense.is_none(),
            full_counterexample: full,
            closed_counterexample: closed,
            reflexive_counterexample: reflexive,
            dense_counterexample: dense,
        }
    }
}

/// Outcome of [`InvolutionSemigroup::predicates`]. Each failed predicate
/// carries the least counterexample in index order:
///
/// * full: an idempotent outside `T`;
/// * closed: an element of the symmetric difference of `T` and `Tω`;
/// * reflexive: a pair `(a, b)` with `ab ∈ T`, `ba ∉ T`;
/// * dense: an element `s` with no `x` such that `sx ∈ T`, or no `y` with `ys ∈ T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetPredicateReport {
    pub closed: bool,
    pub full: bool,
    pub reflexive: bool,
    pub dense: bool,
    pub full_counterexample: Option<Element>,
    pub closed_counterexample: Option<Element>,
    pub reflexive_counterexample: Option<(Element, Element)>,
    pub dense_counterexample: Option<Element>,
}

impl SubsetPredicateReport {
    /// Re-checks every counterexample against `t`.
    pub fn counterexamples_hold(&self, s: &InvolutionSemigroup, t: &Subset) -> bool {
        let full = self
            .full_counterexample
            .is_none_or(|e| s.idempotents().contains(e) && !t.contains(e));
        let closed = self
            .closed_counterexample
            .is_none_or(|e| t.contains(e) != s.omega(t).contains(e));
        let reflexive = self
            .reflexive_counterexample
            .is_none_or(|(a, b)| t.contains(s.mult(a, b)) && !t.contains(s.mult(b, a)));
        let dense = self.dense_counterexample.is_none_or(|e| {
            !s.elements().any(|x| t.contains(s.mult(e, x)))
                || !s.elements().any(|y| t.contains(s.mult(y, e)))
        });
        full && closed && reflexive && dense
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::{chain_semilattice, rectangular_band, symmetric_group};

    #[test]
    fn omega_of_zero_in_chain_is_everything() {
        let s = chain_semilattice(2);
        let t = s.subset([0]).unwrap();
        assert_eq!(s.omega(&t), s.full_set());
        assert!(s.omega(&s.empty_set()).is_empty());
    }

    #[test]
    fn omega_of_odd_permutation_in_s2() {
        let g = symmetric_group(2);
        let odd = g.subset([g.index_of(&[1, 0])]).unwrap();
        let om = g.semigroup.omega(&odd);
        assert_eq!(om, g.semigroup.subset([g.identity()]).unwrap());
        assert!(!odd.is_subset(&om));
    }

    #[test]
    fn generated_subsemigroups_in_s3() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let t12 = g.index_of_cycles(&[&[1, 2]]);
        let c123 = g.index_of_cycles(&[&[1, 2, 3]]);
        assert_eq!(
            s.gen_subsemigroup(&s.subset([t12]).unwrap()),
            s.subset([t12, g.identity()]).unwrap()
        );
        let a3 = s
            .subset([g.identity(), c123, g.index_of_cycles(&[&[1, 3, 2]])])
            .unwrap();
        assert_eq!(s.gen_inv_subsemigroup(&s.subset([c123]).unwrap()), a3);
        assert!(s.gen_subsemigroup(&s.empty_set()).is_empty());
        assert!(s.gen_inv_subsemigroup(&s.empty_set()).is_empty());
    }

    #[test]
    fn band_generates_itself() {
        let s = rectangular_band(3);
        assert_eq!(&s.gen_subsemigroup(s.idempotents()), s.idempotents());
    }

    #[test]
    fn traced_terms_evaluate_to_their_elements() {
        let g = symmetric_group(4);
        let s = &g.semigroup;
        let gens = s
            .subset([
                g.index_of_cycles(&[&[1, 2, 3, 4]]),
                g.index_of_cycles(&[&[1, 2]]),
            ])
            .unwrap();
        let terms = s.gen_inv_subsemigroup_traced(&gens);
        let set = s.gen_inv_subsemigroup(&gens);
        for x in s.elements() {
            assert_eq!(terms[x].is_some(), set.contains(x));
            if let Some(t) = &terms[x] {
                assert_eq!(t.value, x);
                assert!(t.is_consistent(s), "{t}");
                assert!(t.letters.iter().all(|&(l, _)| gens.contains(l)));
            }
        }
    }

    #[test]
    fn predicates_of_whole_and_empty() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let all = s.predicates(&s.full_set());
        assert!(all.full && all.closed && all.reflexive && all.dense);
        let none = s.predicates(&s.empty_set());
        assert!(!none.dense);
        assert!(none.counterexamples_hold(s, &s.empty_set()));
    }

    #[test]
    fn non_normal_subgroup_is_not_reflexive() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let t = s
            .subset([g.identity(), g.index_of_cycles(&[&[1, 2]])])
            .unwrap();
        let r = s.predicates(&t);
        assert!(r.closed && r.full && r.dense);
        assert!(!r.reflexive);
        let (a, b) = r.reflexive_counterexample.unwrap();
        assert!(t.contains(s.mult(a, b)) && !t.contains(s.mult(b, a)));
        assert!(r.counterexamples_hold(s, &t));
    }
}
