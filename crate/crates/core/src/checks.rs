//! Property suites runnable against a single involution semigroup.
//!
//! Each check evaluates one identity or equivalence over a sweep of subsets
//! of the input and reports pass, fail (with the first counterexample) or
//! skipped when the input is outside the class the property talks about.

use std::cell::RefCell;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constructions::{rees_example, ReesExample};
use crate::corpus::random_subsets;
use crate::morphic::DEFAULT_MAX_ORDER;
use crate::semigroup::InvolutionSemigroup;
use crate::subset::Subset;

/// Orders up to which congruence enumeration is used by the suites.
pub const KERNEL_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Regular,
    Commutative,
    Semilattice,
    Morphic,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Core,
        Suite::Regular,
        Suite::Commutative,
        Suite::Semilattice,
        Suite::Morphic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Regular => "regular",
            Suite::Commutative => "commutative",
            Suite::Semilattice => "semilattice",
            Suite::Morphic => "morphic",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Suite::All]
            .into_iter()
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "{tag:<5}{:<12}{}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, "  ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Sweep sizes for the suites.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Subsets are enumerated exhaustively up to this order.
    pub exhaustive_order: usize,
    /// Random subsets drawn above it.
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            exhaustive_order: 12,
            samples: 500,
            seed: 0x5eed,
        }
    }
}

type Outcome = Result<String, String>;

struct Runner<'a> {
    s: &'a InvolutionSemigroup,
    opts: CheckOptions,
    suite: &'static str,
    out: RefCell<Vec<CheckResult>>,
}

impl Runner<'_> {
    fn run(&self, name: &'static str, f: impl FnOnce() -> Outcome) {
        let (status, detail) = match f() {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        self.out.borrow_mut().push(CheckResult {
            suite: self.suite,
            name,
            status,
            detail,
        });
    }

    fn skip(&self, name: &'static str, why: &str) {
        self.out.borrow_mut().push(CheckResult {
            suite: self.suite,
            name,
            status: Status::Skipped,
            detail: why.into(),
        });
    }

    fn sweep(&self) -> Vec<Subset> {
        let n = self.s.order();
        if n <= self.opts.exhaustive_order {
            (0..1u64 << n).map(|m| Subset::from_mask(n, m)).collect()
        } else {
            random_subsets(n, self.opts.samples, self.opts.seed)
        }
    }

    fn random(&self, count: usize, salt: u64) -> Vec<Subset> {
        random_subsets(self.s.order(), count, self.opts.seed ^ salt)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn for_each(sets: &[Subset], mut f: impl FnMut(&Subset) -> Result<(), String>) -> Outcome {
    for t in sets {
        f(t)?;
    }
    Ok(format!("{} subsets", sets.len()))
}

/// Runs the requested suite (or all of them) and returns one line per check.
pub fn run_suite(s: &InvolutionSemigroup, suite: Suite, opts: CheckOptions) -> Vec<CheckResult> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    let mut out = Vec::new();
    for suite in suites {
        let r = Runner {
            s,
            opts,
            suite: suite.name(),
            out: RefCell::new(Vec::new()),
        };
        match suite {
            Suite::Core => core_suite(&r),
            Suite::Regular => regular_suite(&r),
            Suite::Commutative => commutative_suite(&r),
            Suite::Semilattice => semilattice_suite(&r),
            Suite::Morphic => morphic_suite(&r),
            Suite::All => unreachable!(),
        }
        out.extend(r.out.into_inner());
    }
    out
}

fn core_suite(r: &Runner<'_>) {
    let s = r.s;
    let sweep = r.sweep();
    let pairs: Vec<(Subset, Subset)> = r
        .random(200, 1)
        .into_iter()
        .zip(r.random(200, 2))
        .map(|(a, b)| (a.intersection(&b), b))
        .collect();

    r.run("hermitian squares lie in S^2", || {
        ensure(s.hermitian_squares().is_subset(s.square_set()), || {
            "H_S not inside S^2".into()
        })?;
        Ok(String::new())
    });
    r.run("idempotents are star-closed", || {
        ensure(s.star_set(s.idempotents()) == *s.idempotents(), || {
            "E_S* != E_S".into()
        })?;
        Ok(String::new())
    });
    r.run("complex product folds associatively", || {
        let (xs, ys, zs) = (r.random(100, 3), r.random(100, 4), r.random(100, 5));
        for ((x, y), z) in xs.iter().zip(&ys).zip(&zs) {
            let left = s.set_product(&s.set_product(x, y), z);
            let right = s.set_product(x, &s.set_product(y, z));
            ensure(left == right, || format!("({x}{y}){z} != {x}({y}{z})"))?;
        }
        Ok("100 triples".into())
    });
    r.run("omega is monotone", || {
        for (a, b) in &pairs {
            ensure(s.omega(a).is_subset(&s.omega(b)), || {
                format!("A = {a}, B = {b}")
            })?;
        }
        Ok(format!("{} pairs", pairs.len()))
    });
    r.run("omega is extensive on subsemigroups", || {
        for_each(&sweep, |a| {
            let t = s.gen_subsemigroup(a);
            let om = s.omega(&t);
            ensure(t.is_subset(&om) && om.is_subset(&s.omega(&om)), || {
                format!("T = {t}")
            })
        })
    });
    r.run(
        "involution subsemigroup generation is a closure operator",
        || {
            for (a, b) in &pairs {
                let (ga, gb) = (s.gen_inv_subsemigroup(a), s.gen_inv_subsemigroup(b));
                ensure(
                    a.is_subset(&ga) && ga.is_subset(&gb) && s.gen_inv_subsemigroup(&ga) == ga,
                    || format!("A = {a}, B = {b}"),
                )?;
                ensure(s.is_inv_subsemigroup(&ga), || format!("<{a}> not closed"))?;
            }
            Ok(format!("{} pairs", pairs.len()))
        },
    );
    r.run(
        "omega of a conjugation-closed involution subsemigroup is closed",
        || {
            for_each(&sweep, |a| {
                let t = s.gen_inv_subsemigroup(&a.union(s.conjugated_hermitian_pairs()));
                let om = s.omega(&t);
                ensure(
                    s.omega(&om) == om
                        && s.star_set(&om) == om
                        && s.is_inv_subsemigroup(&om)
                        && s.hermitian_squares().is_subset(&om),
                    || format!("T = {t}"),
                )
            })
        },
    );
    r.run(
        "HS-stability: definition agrees with the three conditions",
        || {
            for_each(&sweep, |t| {
                let direct = s.is_hs_stable(t);
                let main = s.hs_main_conditions(t);
                ensure(direct.stable == main.stable(), || {
                    format!("T = {t}: {direct:?} vs {main:?}")
                })?;
                ensure(direct.violation.is_none_or(|v| v.holds(s, t)), || {
                    format!("bogus violation on {t}")
                })
            })
        },
    );
    r.run(
        "generated HS-stable subsemigroup: formula agrees with saturation",
        || {
            for_each(&sweep, |a| {
                let (f, o) = (s.gen_hs_formula(a), s.gen_hs_oracle(a));
                ensure(f == o, || format!("A = {a}: formula {f}, saturation {o}"))
            })
        },
    );
    r.run("S^2 is HS-stable", || {
        ensure(s.is_hs_stable(s.square_set()).stable, || {
            format!("{:?}", s.is_hs_stable(s.square_set()))
        })?;
        Ok(String::new())
    });
    r.run("T is HS-stable iff T cap S^2 is", || {
        for_each(&sweep, |a| {
            let t = s.gen_inv_subsemigroup(a);
            let cut = t.intersection(s.square_set());
            ensure(
                s.is_hs_stable(&t).stable == s.is_hs_stable(&cut).stable,
                || format!("T = {t}"),
            )
        })
    });
    r.run("HS-stable sets contain E_S and every x H_S^2 x*", || {
        for_each(&sweep, |a| {
            let t = s.gen_hs_formula(a);
            ensure(
                s.is_hs_stable(&t).stable
                    && s.idempotents().is_subset(&t)
                    && s.conjugated_hermitian_pairs().is_subset(&t),
                || format!("T = {t}"),
            )
        })
    });
    r.run("HS generation is a closure operator", || {
        for (a, b) in &pairs {
            let (ga, gb) = (s.gen_hs_formula(a), s.gen_hs_formula(b));
            ensure(
                a.is_subset(&ga) && ga.is_subset(&gb) && s.gen_hs_formula(&ga) == ga,
                || format!("A = {a}, B = {b}"),
            )?;
        }
        Ok(format!("{} pairs", pairs.len()))
    });
    if let Some(z) = s.zero() {
        r.run(
            "zero element: generated set is S^2 plus (A u A*) outside S^2",
            || {
                let sq = s.square_set();
                for_each(&sweep, |a| {
                    let expect = sq.union(&a.union(&s.star_set(a)).difference(sq));
                    ensure(s.gen_hs_formula(a) == expect, || {
                        format!("A = {a}, zero {z}")
                    })
                })
            },
        );
        r.run("zero element: HS-simple iff S = S^2", || {
            ensure(s.is_hs_simple() == s.square_set().is_full(), || {
                "mismatch".into()
            })?;
            Ok(String::new())
        });
    } else {
        r.skip(
            "zero element: generated set is S^2 plus (A u A*) outside S^2",
            "no zero",
        );
    }
    r.run("product chains lie in the generated HS-stable set", || {
        let tuples = r.random(90, 6);
        let mut checked = 0;
        for chunk in tuples.chunks(3) {
            let sets: Vec<Subset> = chunk.iter().filter(|t| !t.is_empty()).cloned().collect();
            if sets.is_empty() {
                continue;
            }
            for k in 1..=sets.len() {
                ensure(
                    s.specialform_check(&sets, k).map_err(|e| e.to_string())?,
                    || format!("sets {sets:?}, k = {k}"),
                )?;
                checked += 1;
            }
        }
        Ok(format!("{checked} cases"))
    });
    r.run("subset predicate counterexamples are genuine", || {
        for_each(&sweep, |t| {
            ensure(s.predicates(t).counterexamples_hold(s, t), || {
                format!("T = {t}")
            })
        })
    });
    r.run("witness chains certify proper containment", || {
        let pool = r.random(60, 7);
        let mut proper = 0;
        for chunk in pool.chunks(2) {
            let sets: Vec<Subset> = chunk.iter().filter(|t| !t.is_empty()).cloned().collect();
            if sets.is_empty() {
                continue;
            }
            let product = s.complex_product(&sets).map_err(|e| e.to_string())?;
            let mut candidates = vec![s.full_set()];
            for extra in s.elements().step_by(1 + s.order() / 8) {
                let mut base = product.clone();
                base.insert(extra);
                candidates.push(s.gen_hs_formula(&base));
            }
            for sprime in candidates {
                let outcome = s.check_problem(&sets, &sprime).map_err(|e| e.to_string())?;
                if let crate::hs::ProblemOutcome::Proper { witness, .. } = &outcome {
                    witness.verify(s, &sets, &sprime)?;
                    proper += 1;
                }
                if s.order() <= 8 {
                    let found = s
                        .search_witness(&sets, &sprime)
                        .map_err(|e| e.to_string())?;
                    ensure(
                        found.is_some()
                            == matches!(outcome, crate::hs::ProblemOutcome::Proper { .. }),
                        || format!("search disagrees on {sets:?}, S' = {sprime}"),
                    )?;
                }
            }
        }
        Ok(format!("{proper} proper instances"))
    });
}

/// Reproduces the Rees instance computations when `s` is that instance.
pub fn rees_reproduction(ex: &ReesExample) -> Vec<(&'static str, bool, String)> {
    let s = ex.semigroup();
    let e = ex.e();
    let a = ex.a;
    let a_inv = ex.group.semigroup.star(a);
    let t = ex.rectangular_part();
    let tw = s.omega(&t);
    let tww = s.omega(&tw);
    let target = ex.elem(1, a_inv, 1);
    let gen_e = s.gen_inv_subsemigroup(s.idempotents());
    let e_omega = s.omega(&gen_e);
    let min = s.gen_hs_formula(&s.empty_set());
    let xax = ex.group.index_of_cycles(&[&[2, 3]]);
    let conj = ex.elem(1, xax, 1);
    vec![
        (
            "T omega != (T omega) omega",
            tw != tww
                && !tw.contains(target)
                && tww.contains(target)
                && tw.contains(ex.elem(2, a, 3))
                && tw.contains(ex.elem(1, e, 3)),
            format!(
                "|T omega| = {}, |(T omega) omega| = {}",
                tw.len(),
                tww.len()
            ),
        ),
        (
            "<E_S> omega stays inside K-coordinates",
            e_omega.is_subset(&ex.k_part()),
            format!("|<E_S> omega| = {}", e_omega.len()),
        ),
        (
            "<E_S> omega is not HS-stable",
            !s.is_hs_stable(&e_omega).stable,
            format!("{:?}", s.is_hs_stable(&e_omega).violation),
        ),
        (
            "(1,(23),1) is in the minimum HS-stable set but not in <E_S> omega",
            min.contains(conj) && !e_omega.contains(conj),
            format!("|min| = {}", min.len()),
        ),
    ]
}

fn regular_suite(r: &Runner<'_>) {
    let s = r.s;
    let class = s.classify();
    if !class.regular_star {
        r.skip(
            "regular *-semigroup properties",
            "not a regular *-semigroup",
        );
        return;
    }
    let sweep = r.sweep();
    r.run("hermitian squares vs idempotents", || {
        let he = s.check_he_lemma().map_err(|e| e.to_string())?;
        ensure(he.holds(), || format!("{he:?}"))?;
        Ok(String::new())
    });
    r.run("F_S is the union of x H_S^2 x*", || {
        ensure(s.f_set() == *s.conjugated_hermitian_pairs(), || {
            "sets differ".into()
        })?;
        Ok(String::new())
    });
    r.run("S = S^2", || {
        ensure(s.square_set().is_full(), || "S^2 is proper".into())?;
        Ok(String::new())
    });
    r.run("<T u F_S> omega equals the generated HS-stable set", || {
        for_each(&sweep, |t| {
            ensure(s.gen_hs_regular(t).unwrap() == s.gen_hs_formula(t), || {
                format!("T = {t}")
            })
        })
    });
    if class.orthodox_star {
        r.run(
            "orthodox: <T u E_S> omega equals the generated HS-stable set",
            || {
                ensure(
                    s.gen_inv_subsemigroup(s.idempotents()) == *s.idempotents(),
                    || "E_S != <E_S>".into(),
                )?;
                ensure(s.f_set().is_subset(s.idempotents()), || {
                    "F_S not inside E_S".into()
                })?;
                for_each(&sweep, |t| {
                    ensure(s.gen_hs_orthodox(t).unwrap() == s.gen_hs_formula(t), || {
                        format!("T = {t}")
                    })
                })
            },
        );
        if s.order() <= DEFAULT_MAX_ORDER {
            r.run(
                "orthodox: HS-simple iff every group image is trivial",
                || {
                    let qs = s
                        .enumerate_group_quotients(false, DEFAULT_MAX_ORDER)
                        .map_err(|e| e.to_string())?;
                    let trivial = qs.iter().all(|q| q.order() == 1);
                    ensure(s.is_hs_simple() == trivial, || {
                        format!("simple {}, trivial {trivial}", s.is_hs_simple())
                    })?;
                    Ok(format!("{} group images", qs.len()))
                },
            );
        }
    } else {
        r.skip(
            "orthodox: <T u E_S> omega equals the generated HS-stable set",
            "not orthodox",
        );
    }
    if class.inverse {
        r.run("inverse: absorbing idempotents iff HS-simple", || {
            let inv = s.inverse_hs_simplicity().map_err(|e| e.to_string())?;
            ensure(inv.simple == s.is_hs_simple(), || {
                format!("criterion {}, simple {}", inv.simple, s.is_hs_simple())
            })?;
            Ok(String::new())
        });
    } else {
        r.skip(
            "inverse: absorbing idempotents iff HS-simple",
            "not inverse",
        );
    }
    if s.order() == 54 {
        let ex = rees_example();
        if ex.semigroup() == s {
            for (name, ok, detail) in rees_reproduction(&ex) {
                r.run(name, || if ok { Ok(detail) } else { Err(detail) });
            }
        }
    }
}

fn commutative_suite(r: &Runner<'_>) {
    let s = r.s;
    if !s.is_commutative() {
        r.skip("commutative properties", "not commutative");
        return;
    }
    let sweep = r.sweep();
    let bound = if s.order() <= KERNEL_ORDER {
        KERNEL_ORDER
    } else {
        0
    };
    r.run("HS-stable iff the set conditions hold", || {
        for_each(&sweep, |t| {
            let rep = s
                .check_commutative_theorem(t, 0)
                .map_err(|e| e.to_string())?;
            ensure(rep.stable == rep.conditions, || format!("T = {t}: {rep:?}"))
        })
    });
    if bound > 0 {
        let kernels: Vec<Subset> = s
            .enumerate_group_quotients(true, KERNEL_ORDER)
            .map(|qs| qs.into_iter().map(|q| q.kernel).collect())
            .unwrap_or_default();
        r.run("HS-stable iff kernel of a group image", || {
            for_each(&sweep, |t| {
                let stable = s.is_hs_stable(t).stable;
                let kernel = kernels.contains(t);
                ensure(stable == kernel, || {
                    format!("T = {t}: stable {stable}, kernel {kernel}")
                })
            })
        });
    } else {
        r.skip(
            "HS-stable iff kernel of a group image",
            "order above the congruence bound",
        );
    }
    r.run(
        "<A u H_S> omega formula equals the generated HS-stable set",
        || {
            for_each(&sweep, |a| {
                ensure(
                    s.gen_hs_commutative(a).unwrap() == s.gen_hs_formula(a),
                    || format!("A = {a}"),
                )
            })
        },
    );
    if s.elements().all(|x| s.star(x) == x) {
        r.run("trivial involution: E_S within H_S = squares", || {
            let squares =
                Subset::from_indices(s.order(), s.elements().map(|x| s.mult(x, x))).unwrap();
            ensure(
                *s.hermitian_squares() == squares && s.idempotents().is_subset(&squares),
                || "mismatch".into(),
            )?;
            Ok(String::new())
        });
    }
}

fn semilattice_suite(r: &Runner<'_>) {
    let s = r.s;
    if !s.classify().semilattice {
        r.skip("semilattice properties", "not a semilattice");
        return;
    }
    r.run("generated from idempotents hence HS-simple", || {
        ensure(s.is_hs_simple(), || {
            "a proper HS-stable subsemigroup exists".into()
        })?;
        Ok(String::new())
    });
    r.run(
        "product and union generate the same subsemilattice iff dominated",
        || {
            let pool: Vec<Subset> = if s.order() <= 5 {
                (1..1u64 << s.order())
                    .map(|m| Subset::from_mask(s.order(), m))
                    .collect()
            } else {
                r.random(200, 8)
                    .into_iter()
                    .filter(|t| !t.is_empty())
                    .collect()
            };
            let mut cases = 0usize;
            let limit = pool.len().min(12);
            for i in 0..limit {
                for j in 0..limit {
                    for k in 0..limit {
                        for sets in [
                            vec![pool[i].clone()],
                            vec![pool[i].clone(), pool[j].clone()],
                            vec![pool[i].clone(), pool[j].clone(), pool[k].clone()],
                        ] {
                            let c = s
                                .semilattice_product_criterion(&sets)
                                .map_err(|e| e.to_string())?;
                            ensure(c.generated_equal == c.dominated, || {
                                format!("sets {sets:?}: {c:?}")
                            })?;
                            cases += 1;
                        }
                    }
                }
            }
            Ok(format!("{cases} tuples"))
        },
    );
}

fn morphic_suite(r: &Runner<'_>) {
    let s = r.s;
    if s.order() > KERNEL_ORDER {
        r.skip("group image properties", "order above the congruence bound");
        return;
    }
    let Ok(star_qs) = s.enumerate_group_quotients(true, KERNEL_ORDER) else {
        r.skip("group image properties", "enumeration failed");
        return;
    };
    r.run("kernels of group (o,*)-images are HS-stable", || {
        for q in &star_qs {
            ensure(s.is_hs_stable(&q.kernel).stable, || {
                format!("kernel {}", q.kernel)
            })?;
        }
        Ok(format!("{} images", star_qs.len()))
    });
    r.run("kernel iff closed, reflexive and containing H_S", || {
        let n = s.order();
        let mut checked = 0;
        for m in 0..1u64 << n {
            let t = Subset::from_mask(n, m);
            if !s.is_inv_subsemigroup(&t) {
                continue;
            }
            let predicate = s
                .check_kernel_characterization(&t)
                .map_err(|e| e.to_string())?;
            let kernel = star_qs.iter().any(|q| q.kernel == t);
            ensure(predicate == kernel, || {
                format!("T = {t}: predicate {predicate}, kernel {kernel}")
            })?;
            checked += 1;
        }
        Ok(format!("{checked} involution subsemigroups"))
    });
    r.run(
        "HS-simple implies only the trivial group (o,*)-image",
        || {
            ensure(!s.is_hs_simple() || star_qs.len() == 1, || {
                format!("{} images", star_qs.len())
            })?;
            Ok(String::new())
        },
    );
    r.run(
        "a group image preserves * iff H_S lies in its kernel",
        || {
            let qs = s
                .enumerate_group_quotients(false, KERNEL_ORDER)
                .map_err(|e| e.to_string())?;
            for q in &qs {
                ensure(
                    s.check_involution_preservation(q) == q.maps_star_to_inverse(s),
                    || format!("kernel {}", q.kernel),
                )?;
            }
            Ok(format!("{} group images", qs.len()))
        },
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    fn failures(s: &InvolutionSemigroup) -> Vec<CheckResult> {
        run_suite(s, Suite::All, CheckOptions::default())
            .into_iter()
            .filter(|c| c.status == Status::Fail)
            .collect()
    }

    #[test]
    fn suites_pass_on_groups_and_bands() {
        for s in [
            symmetric_group(3).semigroup,
            rectangular_band(2),
            diamond_semilattice(),
            symmetric_inverse_monoid(2),
        ] {
            assert!(
                failures(&s).is_empty(),
                "{:?}: {:?}",
                s.name(),
                failures(&s)
            );
        }
    }

    #[test]
    fn rees_instance_reproduces() {
        let ex = rees_example();
        for (name, ok, detail) in rees_reproduction(&ex) {
            assert!(ok, "{name}: {detail}");
        }
    }

    #[test]
    fn kernel_leg_fails_on_zero_semigroup() {
        let z = zero_semigroup(3, &[0, 1, 2]).unwrap();
        let f = failures(&z);
        assert_eq!(f.len(), 1, "{f:?}");
        assert_eq!(f[0].name, "HS-stable iff kernel of a group image");
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert_eq!("morphic".parse::<Suite>().unwrap(), Suite::Morphic);
        assert!("nope".parse::<Suite>().is_err());
    }
}
