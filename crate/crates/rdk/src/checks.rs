//! The verification harness. Every check states one claim, sweeps it over a
//! parameter grid, and reports each violating instance with enough detail to
//! reproduce it by hand.

use std::collections::BTreeSet;

use rdk_core::bintree::{build_bqp, d_words, extract_subtrees, omega1, omega2, subdivide, tr};
use rdk_core::orders::{
    build_poset, primitive_subsequence, rotation_covers, rotation_covers_hor, young_covers,
    young_leq, OrderKind,
};
use rdk_core::paren::{
    alpha_i, alpha_ii, alpha_star, beta, gamma, gamma_ii, interleave_and_circle, is_admissible,
    rotate_tuple, DyckTuple, Token,
};
use rdk_core::paths::{
    enumerate_paths, fuss_catalan, highest_path, lowest_path, step_seq_to_word, word_to_height_seq,
    word_to_step_seq, DyckWord, Slope, StepSeq,
};
use rdk_core::stirling::{
    avoids_312, enumerate_stirling, rotation_cover_stirling, young_cover_chi, zeta, zeta_g,
    zeta_inverse, StirlingPerm,
};
use rdk_core::strips::{
    delta, enlarge, eta, interleave_extract, mu, theta, u_prime, v_sequences, QChoice,
};
use rdk_core::trees::{tree_rotation, walk_word, xi, xi_inverse, AryTree};
use rdk_core::{Budget, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub a: u64,
    pub b: u64,
    pub n: u64,
}

impl Cell {
    pub fn describe(&self) -> String {
        format!("({},{}) n={}", self.a, self.b, self.n)
    }
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub cell: Cell,
    pub object: String,
    pub detail: String,
}

/// The parameter grid a check sweeps by default. `--a --b --n` narrow any
/// grid to explicit cells; `--max-size` rescales the capped grids.
#[derive(Debug, Clone, Copy)]
pub enum Grid {
    /// All coprime slopes with (a+b)·n at most the cap.
    Families { cap: u64 },
    /// Coprime slopes with a < b and (a+b)·n at most the cap.
    Skew { cap: u64 },
    /// Slopes (1,m) with m and n bounded.
    Unit { m_max: u64, n_max: u64 },
    /// A handful of pinned instances.
    Fixed(&'static [Cell]),
}

impl Grid {
    pub fn describe(&self, max_size: Option<u64>) -> String {
        match self {
            Grid::Families { cap } => {
                format!("coprime slopes with (a+b)n <= {}", max_size.unwrap_or(*cap))
            }
            Grid::Skew { cap } => {
                format!("coprime slopes, a < b, (a+b)n <= {}", max_size.unwrap_or(*cap))
            }
            Grid::Unit { m_max, n_max } => {
                let base = format!("slopes (1,m) with m <= {m_max}, n <= {n_max}");
                match max_size {
                    Some(s) => format!("{base}, (a+b)n <= {s}"),
                    None => base,
                }
            }
            Grid::Fixed(cells) => {
                let pieces: Vec<String> = cells.iter().map(Cell::describe).collect();
                let base = format!("fixed instances {}", pieces.join("; "));
                match max_size {
                    Some(s) => format!("{base}, (a+b)n <= {s}"),
                    None => base,
                }
            }
        }
    }

    pub fn cells(&self, max_size: Option<u64>) -> Vec<Cell> {
        let mut out = Vec::new();
        match *self {
            Grid::Families { cap } | Grid::Skew { cap } => {
                let skew = matches!(self, Grid::Skew { .. });
                let cap = max_size.unwrap_or(cap);
                for a in 1..cap {
                    for b in 1..=cap.saturating_sub(a) {
                        if skew && b <= a {
                            continue;
                        }
                        if Slope::new(a, b).is_err() {
                            continue;
                        }
                        for n in 1..=cap / (a + b) {
                            out.push(Cell { a, b, n });
                        }
                    }
                }
            }
            Grid::Unit { m_max, n_max } => {
                for b in 1..=m_max {
                    for n in 1..=n_max {
                        out.push(Cell { a: 1, b, n });
                    }
                }
            }
            Grid::Fixed(cells) => out.extend_from_slice(cells),
        }
        if let Some(s) = max_size {
            out.retain(|c| (c.a + c.b) * c.n <= s);
        }
        out
    }

    /// Whether a user-supplied cell makes sense for this grid's claim.
    pub fn admits(&self, cell: Cell) -> Result<(), String> {
        match self {
            Grid::Families { .. } | Grid::Skew { .. } => Ok(()),
            Grid::Unit { .. } => {
                if cell.a == 1 {
                    Ok(())
                } else {
                    Err(String::from("this check sweeps slopes of the form (1,m)"))
                }
            }
            Grid::Fixed(cells) => {
                if cells.contains(&cell) {
                    Ok(())
                } else {
                    Err(String::from("this check runs on pinned instances only"))
                }
            }
        }
    }
}

/// Instance and failure tally for one sweep.
#[derive(Debug, Default)]
pub struct Sweep {
    instances: u64,
    failures: Vec<Failure>,
}

impl Sweep {
    fn record(&mut self, cell: Cell, object: &str, outcome: Result<(), String>) {
        self.instances += 1;
        if let Err(detail) = outcome {
            self.failures.push(Failure { cell, object: object.to_string(), detail });
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub claim: &'static str,
    pub grid: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Runner = fn(&[Cell], &mut Budget, &mut Sweep) -> Result<(), Error>;

pub struct Check {
    pub name: &'static str,
    pub claim: &'static str,
    pub grid: Grid,
    runner: Runner,
}

impl Check {
    pub fn execute(
        &self,
        cells: &[Cell],
        grid: String,
        budget: &mut Budget,
    ) -> Result<CheckReport, Error> {
        let mut sweep = Sweep::default();
        (self.runner)(cells, budget, &mut sweep)?;
        Ok(CheckReport {
            name: self.name,
            claim: self.claim,
            grid,
            instances: sweep.instances,
            failures: sweep.failures,
        })
    }
}

pub fn registry() -> Vec<Check> {
    let mut checks = vec![
        Check {
            name: "admissible-counts",
            claim: "admissible m-tuples are counted by the Fuss-Catalan numbers, \
                    matching the 312-avoiding permutations",
            grid: Grid::Unit { m_max: 3, n_max: 4 },
            runner: run_admissible_counts,
        },
        Check {
            name: "circled-boxes",
            claim: "the circled-box columns of the interleaved tuple transpose to the \
                    nonzero step entries",
            grid: Grid::Families { cap: 12 },
            runner: run_circled_boxes,
        },
        Check {
            name: "d-words",
            claim: "the strided walk words of the interleaved pair tree are the \
                    global-label tuples of both paths",
            grid: Grid::Families { cap: 10 },
            runner: run_d_words,
        },
        Check {
            name: "dual-tuples",
            claim: "the walk words of the mirrored component trees spell the \
                    global-label tuples of the mirrored pair",
            grid: Grid::Skew { cap: 10 },
            runner: run_dual_tuples,
        },
        Check {
            name: "enlarge-extract",
            claim: "extraction from the enlarged path reproduces both strip \
                    decompositions",
            grid: Grid::Families { cap: 12 },
            runner: run_enlarge_extract,
        },
        Check {
            name: "gamma-beta-idempotent",
            claim: "the canonical tuple of the step image is admissible and fixes \
                    admissible tuples",
            grid: Grid::Unit { m_max: 3, n_max: 3 },
            runner: run_gamma_beta_idempotent,
        },
        Check {
            name: "gamma-ii-splits",
            claim: "the global-label splitting sums to the step sequence and agrees \
                    with the insertion image",
            grid: Grid::Families { cap: 12 },
            runner: run_gamma_ii_splits,
        },
        Check {
            name: "mu-zeta",
            claim: "the interleaved distance permutation is the scaled insertion \
                    image of the distance sequence",
            grid: Grid::Families { cap: 12 },
            runner: run_mu_zeta,
        },
        Check {
            name: "omega-contract",
            claim: "the pair tree of comparable paths reads back both paths from \
                    its walk",
            grid: Grid::Families { cap: 12 },
            runner: run_omega_contract,
        },
        Check {
            name: "order-grading",
            claim: "box covers drop the step sum by one; rotation covers drop one \
                    full primitive block",
            grid: Grid::Families { cap: 12 },
            runner: run_order_grading,
        },
        Check {
            name: "path-counts",
            claim: "families with a = 1 are counted by the Fuss-Catalan numbers",
            grid: Grid::Unit { m_max: 3, n_max: 5 },
            runner: run_path_counts,
        },
        Check {
            name: "path-round-trips",
            claim: "step sequences, height sequences, and ascii words each determine \
                    the path",
            grid: Grid::Families { cap: 16 },
            runner: run_path_round_trips,
        },
        Check {
            name: "prefix-law",
            claim: "every prefix keeps b times the north steps at least a times the \
                    east steps",
            grid: Grid::Families { cap: 12 },
            runner: run_prefix_law,
        },
        Check {
            name: "rectangle-content",
            claim: "the top-left box of an m-row, n-column rectangle has arm plus \
                    leg plus one equal to n+m-1",
            grid: Grid::Unit { m_max: 6, n_max: 6 },
            runner: run_rectangle_content,
        },
        Check {
            name: "rot-equivalence",
            claim: "for a < b the primitive-block covers and the horizontal-distance \
                    covers coincide",
            grid: Grid::Skew { cap: 14 },
            runner: run_rot_equivalence,
        },
        Check {
            name: "rot-refines-young",
            claim: "every rotation cover is reachable by a chain of box covers",
            grid: Grid::Families { cap: 12 },
            runner: run_rot_refines_young,
        },
        Check {
            name: "rot-remark",
            claim: "at slope (2,1) the two rotation variants differ at (0,0,1,1,2,2) \
                    by exactly (0,0,0,0,1,1) against (0,0,0,1,2,2)",
            grid: Grid::Fixed(&[Cell { a: 2, b: 1, n: 3 }]),
            runner: run_rot_remark,
        },
        Check {
            name: "sharp-duality",
            claim: "the vertical strip trees are the mirrored horizontal strip trees \
                    in reverse order",
            grid: Grid::Skew { cap: 10 },
            runner: run_sharp_duality,
        },
        Check {
            name: "step-bounds",
            claim: "step sequences rise, stay under the slope bound, and sit between \
                    the two extreme paths",
            grid: Grid::Families { cap: 12 },
            runner: run_step_bounds,
        },
        Check {
            name: "stirling-rotation",
            claim: "the rotation on insertion images matches the rotation covers of \
                    the path",
            grid: Grid::Unit { m_max: 3, n_max: 4 },
            runner: run_stirling_rotation,
        },
        Check {
            name: "strip-chains",
            claim: "the distance splittings are monotone as stated, exhaust the \
                    scaled distances, and build valid permutations",
            grid: Grid::Families { cap: 12 },
            runner: run_strip_chains,
        },
        Check {
            name: "strip-injective",
            claim: "distinct paths have distinct strip decompositions",
            grid: Grid::Families { cap: 12 },
            runner: run_strip_injective,
        },
        Check {
            name: "strip-steps",
            claim: "the step sequences of the horizontal strips are the highest-path \
                    distance splittings",
            grid: Grid::Families { cap: 12 },
            runner: run_strip_steps,
        },
        Check {
            name: "strip-trees",
            claim: "the extracted pair trees are the pair trees of the vertical \
                    strips",
            grid: Grid::Skew { cap: 10 },
            runner: run_strip_trees,
        },
        Check {
            name: "tree-rotation",
            claim: "tree rotations realize exactly the rotation covers of the path",
            grid: Grid::Unit { m_max: 3, n_max: 4 },
            runner: run_tree_rotation,
        },
        Check {
            name: "tuple-rotation",
            claim: "the rotation on admissible tuples matches the rotation covers of \
                    the path",
            grid: Grid::Unit { m_max: 3, n_max: 4 },
            runner: run_tuple_rotation,
        },
        Check {
            name: "walk-word-shape",
            claim: "the tree walk emits n opens, n closes, and n*b stars, properly \
                    nested",
            grid: Grid::Unit { m_max: 3, n_max: 4 },
            runner: run_walk_word_shape,
        },
        Check {
            name: "xi-round-trip",
            claim: "the leaf-insertion map is a bijection onto the labeled trees",
            grid: Grid::Unit { m_max: 3, n_max: 4 },
            runner: run_xi_round_trip,
        },
        Check {
            name: "young-order-chi",
            claim: "the block-move covers on insertion images match the box covers \
                    of the path",
            grid: Grid::Unit { m_max: 3, n_max: 5 },
            runner: run_young_order_chi,
        },
        Check {
            name: "zeta-avoids-312",
            claim: "the insertion images of step sequences are exactly the \
                    312-avoiding permutations",
            grid: Grid::Unit { m_max: 3, n_max: 5 },
            runner: run_zeta_avoids_312,
        },
        Check {
            name: "zeta-round-trip",
            claim: "the insertion map and its inverse cancel on every step sequence \
                    of the family",
            grid: Grid::Unit { m_max: 3, n_max: 5 },
            runner: run_zeta_round_trip,
        },
    ];
    checks.sort_by_key(|c| c.name);
    checks
}

pub fn find(name: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.name == name)
}

fn paths_of(cell: Cell, budget: &mut Budget) -> Result<(Slope, Vec<DyckWord>), Error> {
    let slope = Slope::new(cell.a, cell.b)?;
    let mut words = Vec::new();
    for p in enumerate_paths(slope, cell.n) {
        budget.charge(1)?;
        words.push(p);
    }
    Ok((slope, words))
}

fn entry_sets(covers: &[DyckWord]) -> BTreeSet<Vec<u64>> {
    covers.iter().map(|q| word_to_step_seq(q).entries().to_vec()).collect()
}

fn set_string(set: &BTreeSet<Vec<u64>>) -> String {
    let pieces: Vec<String> = set.iter().map(|v| format!("{v:?}")).collect();
    format!("{{{}}}", pieces.join(", "))
}

fn run_path_round_trips(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (slope, words) = paths_of(cell, budget)?;
        for p in &words {
            let verdict = (|| {
                let u = word_to_step_seq(p);
                if step_seq_to_word(&u) != *p {
                    return Err(format!("step sequence {:?} rebuilds another path", u.entries()));
                }
                let h = word_to_height_seq(p);
                if rdk_core::paths::height_seq_to_word(&h) != *p {
                    return Err(format!("height sequence {:?} rebuilds another path", h.entries()));
                }
                match DyckWord::from_ascii(slope, &p.to_ascii()) {
                    Ok(q) if q == *p => Ok(()),
                    _ => Err(String::from("the ascii word does not parse back")),
                }
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_path_counts(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        let expected = fuss_catalan(cell.b, cell.n);
        let got = num_bigint_from(words.len() as u64);
        let verdict = if got == expected {
            Ok(())
        } else {
            Err(format!("counted {} paths, the formula gives {expected}", words.len()))
        };
        sweep.record(cell, "family count", verdict);
    }
    Ok(())
}

fn num_bigint_from(x: u64) -> num_bigint::BigUint {
    num_bigint::BigUint::from(x)
}

fn run_step_bounds(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (slope, words) = paths_of(cell, budget)?;
        let low = word_to_step_seq(&lowest_path(slope, cell.n));
        let high = word_to_step_seq(&highest_path(slope, cell.n));
        for p in &words {
            let u = word_to_step_seq(p);
            let verdict = (|| {
                let entries = u.entries();
                if entries.windows(2).any(|w| w[0] > w[1]) {
                    return Err(format!("step sequence {entries:?} is not weakly increasing"));
                }
                for (k, &x) in entries.iter().enumerate() {
                    if cell.a * x > cell.b * k as u64 {
                        return Err(format!("entry {} at position {} crosses the slope bound", x, k + 1));
                    }
                }
                if entries.iter().zip(low.entries()).any(|(x, l)| x > l) {
                    return Err(String::from("the lowest path does not dominate this one"));
                }
                if high.entries().iter().any(|&x| x != 0)
                    || entries.iter().zip(high.entries()).any(|(x, h)| x < h)
                {
                    return Err(String::from("the highest path is not the all-zero sequence"));
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_prefix_law(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let verdict = p
                .lattice_points()
                .iter()
                .find(|&&(x, y)| cell.b * y < cell.a * x)
                .map_or(Ok(()), |&(x, y)| {
                    Err(format!("the prefix ending at ({x},{y}) dips below the diagonal"))
                });
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_rot_equivalence(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (slope, words) = paths_of(cell, budget)?;
        let p0 = lowest_path(slope, cell.n);
        for p in &words {
            let rot = entry_sets(&rotation_covers(p));
            let hor = entry_sets(&rotation_covers_hor(p, &p0));
            let verdict = if rot == hor {
                Ok(())
            } else {
                Err(format!(
                    "primitive-block covers {} differ from horizontal-distance covers {}",
                    set_string(&rot),
                    set_string(&hor)
                ))
            };
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_rot_remark(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        budget.charge(1)?;
        let slope = Slope::new(cell.a, cell.b)?;
        let u = StepSeq::new(slope, vec![0, 0, 1, 1, 2, 2])?;
        let p = step_seq_to_word(&u);
        let p0 = lowest_path(slope, cell.n);
        let rot = entry_sets(&rotation_covers(&p));
        let hor = entry_sets(&rotation_covers_hor(&p, &p0));
        let rot_only: BTreeSet<Vec<u64>> = rot.difference(&hor).cloned().collect();
        let hor_only: BTreeSet<Vec<u64>> = hor.difference(&rot).cloned().collect();
        let expected_rot: BTreeSet<Vec<u64>> = [vec![0, 0, 0, 0, 1, 1]].into_iter().collect();
        let expected_hor: BTreeSet<Vec<u64>> = [vec![0, 0, 0, 1, 2, 2]].into_iter().collect();
        let verdict = if rot_only == expected_rot && hor_only == expected_hor {
            Ok(())
        } else {
            Err(format!(
                "the sets differ by {} against {}; primitive-block covers are {}, \
                 horizontal-distance covers are {}",
                set_string(&rot_only),
                set_string(&hor_only),
                set_string(&rot),
                set_string(&hor)
            ))
        };
        sweep.record(cell, &p.to_ascii(), verdict);
    }
    Ok(())
}

fn run_rot_refines_young(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let slope = Slope::new(cell.a, cell.b)?;
        let poset = build_poset(slope, cell.n, OrderKind::Young, budget)?;
        let index = |w: &DyckWord| {
            poset
                .elements()
                .binary_search(&word_to_step_seq(w))
                .expect("covers stay within the family")
        };
        for p in enumerate_paths(slope, cell.n) {
            budget.charge(1)?;
            for q in rotation_covers(&p) {
                let verdict = if poset.le(index(&p), index(&q)) {
                    Ok(())
                } else {
                    Err(format!(
                        "no chain of box covers reaches {:?}",
                        word_to_step_seq(&q).entries()
                    ))
                };
                sweep.record(cell, &p.to_ascii(), verdict);
            }
        }
    }
    Ok(())
}

fn run_order_grading(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let u = word_to_step_seq(p);
            let sum: u64 = u.entries().iter().sum();
            for q in young_covers(p) {
                let qsum: u64 = word_to_step_seq(&q).entries().iter().sum();
                let verdict = if sum == qsum + 1 {
                    Ok(())
                } else {
                    Err(format!("a box cover changed the sum by {}", sum - qsum))
                };
                sweep.record(cell, &p.to_ascii(), verdict);
            }
            for q in rotation_covers(p) {
                let uq = word_to_step_seq(&q);
                let verdict = (|| {
                    let diffs: Vec<u64> = u
                        .entries()
                        .iter()
                        .zip(uq.entries())
                        .map(|(x, y)| x.checked_sub(*y).unwrap_or(u64::MAX))
                        .collect();
                    if diffs.iter().any(|&d| d > 1) {
                        return Err(format!("a rotation cover moved an entry by more than one: {diffs:?}"));
                    }
                    let ones: Vec<usize> = diffs
                        .iter()
                        .enumerate()
                        .filter(|(_, &d)| d == 1)
                        .map(|(k, _)| k)
                        .collect();
                    if ones.is_empty() {
                        return Err(String::from("a rotation cover moved nothing"));
                    }
                    if ones[ones.len() - 1] - ones[0] + 1 != ones.len() {
                        return Err(format!("the decremented block is not contiguous: {diffs:?}"));
                    }
                    let i = ones[0] + 1;
                    let k = primitive_subsequence(&u, i);
                    if ones.len() != k - (i - 1) {
                        return Err(format!(
                            "the block length {} is not the primitive length {}",
                            ones.len(),
                            k - (i - 1)
                        ));
                    }
                    Ok(())
                })();
                sweep.record(cell, &p.to_ascii(), verdict);
            }
        }
    }
    Ok(())
}

fn run_zeta_avoids_312(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        let mut images = BTreeSet::new();
        for p in &words {
            let u = word_to_step_seq(p);
            let verdict = match zeta(u.entries(), cell.b) {
                Ok(pi) => {
                    let ok = avoids_312(&pi);
                    images.insert(pi.clone());
                    if ok {
                        Ok(())
                    } else {
                        Err(format!("the image {pi} contains the pattern 312"))
                    }
                }
                Err(e) => Err(e.to_string()),
            };
            sweep.record(cell, &p.to_ascii(), verdict);
        }
        let mut avoiders = BTreeSet::new();
        for pi in enumerate_stirling(cell.n, cell.b) {
            budget.charge(1)?;
            if avoids_312(&pi) {
                avoiders.insert(pi);
            }
        }
        let verdict = if images == avoiders {
            Ok(())
        } else {
            Err(format!(
                "{} images against {} avoiders in the family",
                images.len(),
                avoiders.len()
            ))
        };
        sweep.record(cell, "image set", verdict);
    }
    Ok(())
}

fn run_zeta_round_trip(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let u = word_to_step_seq(p);
            let verdict = match zeta(u.entries(), cell.b) {
                Ok(pi) => {
                    let back = zeta_inverse(&pi);
                    if back == u.entries() {
                        Ok(())
                    } else {
                        Err(format!("{pi} inverts to {back:?}"))
                    }
                }
                Err(e) => Err(e.to_string()),
            };
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_young_order_chi(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            budget.charge(1)?;
            let u = word_to_step_seq(p);
            let verdict = (|| {
                let pi = zeta(u.entries(), cell.b).map_err(|e| e.to_string())?;
                let expected: BTreeSet<StirlingPerm> = young_covers(p)
                    .iter()
                    .map(|q| zeta(word_to_step_seq(q).entries(), cell.b))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                let got: BTreeSet<StirlingPerm> = (1..pi.entries().len())
                    .filter_map(|i| young_cover_chi(&pi, i).ok())
                    .collect();
                if got == expected {
                    Ok(())
                } else {
                    Err(format!(
                        "block moves give {} images, box covers give {}",
                        got.len(),
                        expected.len()
                    ))
                }
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_stirling_rotation(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            budget.charge(1)?;
            let u = word_to_step_seq(p);
            let verdict = (|| {
                let pi = zeta(u.entries(), cell.b).map_err(|e| e.to_string())?;
                let expected: BTreeSet<StirlingPerm> = rotation_covers(p)
                    .iter()
                    .map(|q| zeta(word_to_step_seq(q).entries(), cell.b))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                let got: BTreeSet<StirlingPerm> = (1..pi.entries().len())
                    .filter_map(|i| rotation_cover_stirling(&pi, i).ok())
                    .collect();
                if got == expected {
                    Ok(())
                } else {
                    Err(format!(
                        "rotation moves give {} images, rotation covers give {}",
                        got.len(),
                        expected.len()
                    ))
                }
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_xi_round_trip(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let mut trees: BTreeSet<AryTree> = BTreeSet::new();
        let mut perms = 0u64;
        for pi in enumerate_stirling(cell.n, cell.b) {
            budget.charge(1)?;
            perms += 1;
            let t = xi(&pi);
            let verdict = if xi_inverse(&t) == pi {
                Ok(())
            } else {
                Err(String::from("the tree does not read back to the permutation"))
            };
            trees.insert(t);
            sweep.record(cell, &pi.to_string(), verdict);
        }
        let verdict = if trees.len() as u64 == perms {
            Ok(())
        } else {
            Err(format!("{} trees for {} permutations", trees.len(), perms))
        };
        sweep.record(cell, "tree count", verdict);
    }
    Ok(())
}

fn run_tree_rotation(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (slope, words) = paths_of(cell, budget)?;
        for p in &words {
            budget.charge(1)?;
            let u = word_to_step_seq(p);
            let verdict = (|| {
                let pi = zeta(u.entries(), cell.b).map_err(|e| e.to_string())?;
                let t = xi(&pi);
                let expected: BTreeSet<StepSeq> =
                    rotation_covers(p).iter().map(word_to_step_seq).collect();
                let mut got = BTreeSet::new();
                for i in 2..=cell.n {
                    let rotated = tree_rotation(&t, i);
                    if rotated == t {
                        continue;
                    }
                    let v = zeta_inverse(&xi_inverse(&rotated));
                    if let Ok(seq) = StepSeq::new(slope, v) {
                        got.insert(seq);
                    }
                }
                if got == expected {
                    Ok(())
                } else {
                    Err(format!(
                        "rotations reach {} covers, the order has {}",
                        got.len(),
                        expected.len()
                    ))
                }
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_walk_word_shape(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let _ = Slope::new(cell.a, cell.b)?;
        for pi in enumerate_stirling(cell.n, cell.b) {
            budget.charge(1)?;
            let w = walk_word(&xi(&pi));
            let verdict = (|| {
                let mut opens = 0u64;
                let mut closes = 0u64;
                let mut stars = 0u64;
                let mut depth = 0i64;
                for token in w.tokens() {
                    match token {
                        Token::Open => {
                            opens += 1;
                            depth += 1;
                        }
                        Token::Close => {
                            closes += 1;
                            depth -= 1;
                            if depth < 0 {
                                return Err(String::from("a close falls before its open"));
                            }
                        }
                        Token::Star => stars += 1,
                    }
                }
                if depth != 0 {
                    return Err(String::from("the parentheses do not balance"));
                }
                if opens != cell.n || closes != cell.n || stars != cell.n * cell.b {
                    return Err(format!(
                        "saw {opens} opens, {closes} closes, {stars} stars in {w}"
                    ));
                }
                Ok(())
            })();
            sweep.record(cell, &pi.to_string(), verdict);
        }
    }
    Ok(())
}

fn unit_words(n: u64, budget: &mut Budget) -> Result<Vec<DyckWord>, Error> {
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    let mut words = Vec::new();
    for p in enumerate_paths(slope, n) {
        budget.charge(1)?;
        words.push(p);
    }
    Ok(words)
}

fn tuple_space(
    m: u64,
    n: u64,
    budget: &mut Budget,
    mut visit: impl FnMut(DyckTuple) -> Result<(), Error>,
) -> Result<(), Error> {
    let words = unit_words(n, budget)?;
    let m = m as usize;
    let mut odometer = vec![0usize; m];
    loop {
        budget.charge(1)?;
        let components: Vec<DyckWord> =
            odometer.iter().map(|&i| words[i].clone()).collect();
        let tuple = DyckTuple::new(components).expect("equal sizes by construction");
        visit(tuple)?;
        let mut place = 0;
        loop {
            if place == m {
                return Ok(());
            }
            odometer[place] += 1;
            if odometer[place] < words.len() {
                break;
            }
            odometer[place] = 0;
            place += 1;
        }
    }
}

fn run_admissible_counts(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let mut chains = 0u64;
        let mut admissible = 0u64;
        tuple_space(cell.b, cell.n, budget, |t| {
            if t.is_young_chain() {
                chains += 1;
                if is_admissible(&t) {
                    admissible += 1;
                }
            }
            Ok(())
        })?;
        let mut avoiders = 0u64;
        for pi in enumerate_stirling(cell.n, cell.b) {
            budget.charge(1)?;
            if avoids_312(&pi) {
                avoiders += 1;
            }
        }
        let expected = fuss_catalan(cell.b, cell.n);
        let verdict = if num_bigint_from(admissible) == expected && admissible == avoiders {
            Ok(())
        } else {
            Err(format!(
                "{admissible} admissible tuples ({chains} chains), {avoiders} avoiders, \
                 formula {expected}"
            ))
        };
        sweep.record(cell, "tuple count", verdict);
    }
    Ok(())
}

fn run_gamma_beta_idempotent(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let mut outcomes: Vec<(String, Result<(), String>)> = Vec::new();
        tuple_space(cell.b, cell.n, budget, |t| {
            if !t.is_young_chain() {
                return Ok(());
            }
            let object = format!("{t}");
            let verdict = (|| {
                let u = beta(&t);
                let s = gamma(u.entries(), cell.b).map_err(|e| e.to_string())?;
                if !is_admissible(&s) {
                    return Err(String::from("the canonical tuple is not admissible"));
                }
                if beta(&s).entries() != u.entries() {
                    return Err(String::from("the canonical tuple changes the step image"));
                }
                if gamma(beta(&s).entries(), cell.b).map_err(|e| e.to_string())? != s {
                    return Err(String::from("a second pass moves the canonical tuple"));
                }
                if is_admissible(&t) && s != t {
                    return Err(String::from("an admissible tuple is not fixed"));
                }
                Ok(())
            })();
            outcomes.push((object, verdict));
            Ok(())
        })?;
        for (object, verdict) in outcomes {
            sweep.record(cell, &object, verdict);
        }
        for pi in enumerate_stirling(cell.n, cell.b) {
            budget.charge(1)?;
            if !avoids_312(&pi) {
                continue;
            }
            let verdict = if is_admissible(&alpha_i(&pi)) {
                Ok(())
            } else {
                Err(String::from("the labeled tuple of a 312-avoider is not admissible"))
            };
            sweep.record(cell, &pi.to_string(), verdict);
        }
    }
    Ok(())
}

fn run_gamma_ii_splits(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let u = word_to_step_seq(p);
            let verdict = (|| {
                let t = gamma_ii(u.entries(), cell.b).map_err(|e| e.to_string())?;
                if beta(&t).entries() != u.entries() {
                    return Err(String::from("the split components do not sum to the sequence"));
                }
                let pi = zeta(u.entries(), cell.b).map_err(|e| e.to_string())?;
                if t != alpha_ii(&pi) {
                    return Err(String::from("the split differs from the labeled tuple"));
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_tuple_rotation(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            budget.charge(1)?;
            let u = word_to_step_seq(p);
            let verdict = (|| {
                let pi = zeta(u.entries(), cell.b).map_err(|e| e.to_string())?;
                let t = alpha_i(&pi);
                let pp = alpha_star(&pi);
                let mut got = BTreeSet::new();
                for i in 2..=cell.n as usize {
                    if u.entries()[i - 2] < u.entries()[i - 1] {
                        let rotated =
                            rotate_tuple(&t, &pp, i, cell.a).map_err(|e| e.to_string())?;
                        if !is_admissible(&rotated) {
                            return Err(format!("the rotation at {i} leaves admissibility"));
                        }
                        got.insert(rotated);
                    } else if rotate_tuple(&t, &pp, i, cell.a).is_ok() {
                        return Err(format!("a rotation at the flat position {i} succeeded"));
                    }
                }
                let expected: BTreeSet<DyckTuple> = rotation_covers(p)
                    .iter()
                    .map(|c| zeta(word_to_step_seq(c).entries(), cell.b).map(|pi| alpha_i(&pi)))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                if got == expected {
                    Ok(())
                } else {
                    Err(format!(
                        "tuple rotations reach {} covers, the order has {}",
                        got.len(),
                        expected.len()
                    ))
                }
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_circled_boxes(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let u = word_to_step_seq(p);
            let verdict = (|| {
                let pi = zeta(u.entries(), cell.b).map_err(|e| e.to_string())?;
                let v = interleave_and_circle(&alpha_i(&pi));
                let mut transpose = Vec::new();
                let mut j = 1u64;
                loop {
                    let count = v.iter().filter(|&&x| x >= j).count() as u64;
                    if count == 0 {
                        break;
                    }
                    transpose.push(count);
                    j += 1;
                }
                let mut nonzero: Vec<u64> =
                    u.entries().iter().copied().filter(|&x| x > 0).collect();
                nonzero.sort_unstable_by(|x, y| y.cmp(x));
                if transpose == nonzero {
                    Ok(())
                } else {
                    Err(format!("transpose {transpose:?} against entries {nonzero:?}"))
                }
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_rectangle_content(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        budget.charge(1)?;
        let rows = cell.b as usize;
        let columns = cell.n as usize;
        let diagram = vec![vec![true; columns]; rows];
        let arm = diagram[0][1..].iter().filter(|&&boxed| boxed).count();
        let leg = diagram[1..].iter().filter(|row| row[0]).count();
        let content = arm + leg + 1;
        let verdict = if content == columns + rows - 1 {
            Ok(())
        } else {
            Err(format!("content {content} for a {rows} by {columns} rectangle"))
        };
        sweep.record(cell, &format!("{rows}x{columns} rectangle"), verdict);
    }
    Ok(())
}

fn run_mu_zeta(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            for q in [QChoice::Lowest, QChoice::Highest] {
                let verdict = match zeta_g(&u_prime(p, q), cell.a, 1, cell.b) {
                    Ok(expected) => {
                        if mu(p, q) == expected {
                            Ok(())
                        } else {
                            Err(format!("the interleaved permutation differs from {expected}"))
                        }
                    }
                    Err(e) => Err(e.to_string()),
                };
                sweep.record(cell, &p.to_ascii(), verdict);
            }
        }
    }
    Ok(())
}

fn run_strip_steps(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let steps: Vec<Vec<u64>> = delta(p)
                .components()
                .iter()
                .map(|c| word_to_step_seq(c).entries().to_vec())
                .collect();
            let vs = v_sequences(p, QChoice::Highest);
            let verdict = if steps == vs.sequences() {
                Ok(())
            } else {
                Err(format!("strip steps {steps:?} against splittings {:?}", vs.sequences()))
            };
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_strip_chains(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let verdict = (|| {
                let d = delta(p);
                for pair in d.components().windows(2) {
                    if !young_leq(&pair[0], &pair[1]) {
                        return Err(String::from("the horizontal strips do not climb"));
                    }
                }
                let t = theta(p);
                for pair in t.components().windows(2) {
                    let u0 = word_to_step_seq(&pair[0]);
                    let u1 = word_to_step_seq(&pair[1]);
                    if u0.entries().iter().zip(u1.entries()).any(|(x, y)| x > y) {
                        return Err(String::from("the vertical strips do not descend"));
                    }
                }
                for q in [QChoice::Lowest, QChoice::Highest] {
                    let vs = v_sequences(p, q);
                    let scaled: Vec<u64> =
                        u_prime(p, q).iter().map(|x| cell.a * x).collect();
                    let mut total = vec![0u64; scaled.len()];
                    for v in vs.sequences() {
                        for (t, x) in total.iter_mut().zip(v) {
                            *t += x;
                        }
                        eta(v).map_err(|e| e.to_string())?;
                    }
                    if total != scaled {
                        return Err(format!("the splittings sum to {total:?}, not {scaled:?}"));
                    }
                    match q {
                        QChoice::Highest => {
                            for v in vs.sequences() {
                                if v.windows(2).any(|w| w[0] > w[1]) {
                                    return Err(format!("a highest splitting falls: {v:?}"));
                                }
                            }
                        }
                        QChoice::Lowest => {
                            for pair in vs.sequences().windows(2) {
                                if pair[0].iter().zip(&pair[1]).any(|(x, y)| x < y) {
                                    return Err(String::from(
                                        "the lowest splittings are not descending",
                                    ));
                                }
                            }
                        }
                    }
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_strip_injective(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        let deltas: BTreeSet<DyckTuple> = words.iter().map(delta).collect();
        let thetas: BTreeSet<DyckTuple> = words.iter().map(theta).collect();
        let verdict = if deltas.len() == words.len() && thetas.len() == words.len() {
            Ok(())
        } else {
            Err(format!(
                "{} paths give {} horizontal and {} vertical decompositions",
                words.len(),
                deltas.len(),
                thetas.len()
            ))
        };
        sweep.record(cell, "family", verdict);
    }
    Ok(())
}

fn run_enlarge_extract(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let verdict = (|| {
                let tilde = enlarge(p);
                if interleave_extract(&tilde, cell.b).map_err(|e| e.to_string())? != delta(p) {
                    return Err(String::from("extraction by b misses the horizontal strips"));
                }
                if interleave_extract(&tilde, cell.a).map_err(|e| e.to_string())? != theta(p) {
                    return Err(String::from("extraction by a misses the vertical strips"));
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_omega_contract(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (_, words) = paths_of(cell, budget)?;
        for p in &words {
            let verdict = (|| {
                let t = tr(p);
                if omega1(&t).map_err(|e| e.to_string())? != *p {
                    return Err(String::from("the first walk word is not the path"));
                }
                if omega2(&t).map_err(|e| e.to_string())? != *p {
                    return Err(String::from("the second walk word is not the path"));
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
        for q in &words {
            for p in &words {
                if !young_leq(p, q) {
                    continue;
                }
                budget.charge(1)?;
                let verdict = (|| {
                    let t = build_bqp(q, p).map_err(|e| e.to_string())?;
                    if omega1(&t).map_err(|e| e.to_string())? != *q {
                        return Err(String::from("the first walk word is not the upper path"));
                    }
                    if omega2(&t).map_err(|e| e.to_string())? != *p {
                        return Err(String::from("the second walk word is not the lower path"));
                    }
                    Ok(())
                })();
                sweep.record(cell, &format!("{} over {}", q.to_ascii(), p.to_ascii()), verdict);
            }
        }
    }
    Ok(())
}

struct DualParts {
    b_parts: Vec<rdk_core::bintree::BinaryTree>,
    c_parts: Vec<rdk_core::bintree::BinaryTree>,
}

fn dual_parts(p: &DyckWord, p0: &DyckWord, cell: Cell) -> Result<DualParts, String> {
    let b_tilde = subdivide(
        &build_bqp(p, p0).map_err(|e| e.to_string())?,
        cell.b as usize,
        cell.a as usize,
        0,
    )
    .map_err(|e| e.to_string())?;
    let c_tilde = subdivide(
        &build_bqp(&p.sharp(), &p0.sharp()).map_err(|e| e.to_string())?,
        cell.a as usize,
        cell.b as usize,
        0,
    )
    .map_err(|e| e.to_string())?;
    Ok(DualParts {
        b_parts: extract_subtrees(&b_tilde, cell.a as usize).map_err(|e| e.to_string())?,
        c_parts: extract_subtrees(&c_tilde, cell.a as usize).map_err(|e| e.to_string())?,
    })
}

fn run_sharp_duality(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (slope, words) = paths_of(cell, budget)?;
        let p0 = lowest_path(slope, cell.n);
        for p in &words {
            budget.charge(1)?;
            let verdict = (|| {
                let parts = dual_parts(p, &p0, cell)?;
                let count = parts.b_parts.len();
                for (i, part) in parts.b_parts.iter().enumerate() {
                    let dual = &parts.c_parts[count - 1 - i];
                    if omega1(part).map_err(|e| e.to_string())?
                        != omega1(dual).map_err(|e| e.to_string())?.sharp()
                    {
                        return Err(format!("the first words differ at component {}", i + 1));
                    }
                    if omega2(part).map_err(|e| e.to_string())?
                        != omega2(dual).map_err(|e| e.to_string())?.sharp()
                    {
                        return Err(format!("the second words differ at component {}", i + 1));
                    }
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_strip_trees(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (slope, words) = paths_of(cell, budget)?;
        let p0 = lowest_path(slope, cell.n);
        for p in &words {
            budget.charge(1)?;
            let verdict = (|| {
                let parts = dual_parts(p, &p0, cell)?.b_parts;
                let th = theta(p);
                let th0 = theta(&p0);
                if parts.len() as u64 != cell.a {
                    return Err(format!("{} parts for {} strips", parts.len(), cell.a));
                }
                for (i, part) in parts.iter().enumerate() {
                    let hi = &th.components()[i];
                    let lo = &th0.components()[i];
                    if omega1(part).map_err(|e| e.to_string())? != *hi {
                        return Err(format!("part {} does not read the strip", i + 1));
                    }
                    if omega2(part).map_err(|e| e.to_string())? != *lo {
                        return Err(format!("part {} does not read the lowest strip", i + 1));
                    }
                    if *part != build_bqp(hi, lo).map_err(|e| e.to_string())? {
                        return Err(format!("part {} is not the pair tree of its strips", i + 1));
                    }
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_dual_tuples(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (slope, words) = paths_of(cell, budget)?;
        let p0 = lowest_path(slope, cell.n);
        for p in &words {
            budget.charge(1)?;
            let verdict = (|| {
                let parts = dual_parts(p, &p0, cell)?.c_parts;
                let hi: Vec<DyckWord> = parts
                    .iter()
                    .rev()
                    .map(|t| omega1(t).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
                let lo: Vec<DyckWord> = parts
                    .iter()
                    .rev()
                    .map(|t| omega2(t).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
                let u = word_to_step_seq(&p.sharp());
                let u0 = word_to_step_seq(&p0.sharp());
                let pi = zeta_g(u.entries(), cell.b, 1, cell.a).map_err(|e| e.to_string())?;
                let pi0 = zeta_g(u0.entries(), cell.b, 1, cell.a).map_err(|e| e.to_string())?;
                if alpha_ii(&pi).components() != &hi[..] {
                    return Err(String::from("the upper tuple is not the global-label tuple"));
                }
                if alpha_ii(&pi0).components() != &lo[..] {
                    return Err(String::from("the lower tuple is not the global-label tuple"));
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}

fn run_d_words(cells: &[Cell], budget: &mut Budget, sweep: &mut Sweep) -> Result<(), Error> {
    for &cell in cells {
        let (slope, words) = paths_of(cell, budget)?;
        let p0 = lowest_path(slope, cell.n);
        for p in &words {
            budget.charge(1)?;
            let verdict = (|| {
                let extra = ((cell.a - 1) * cell.b * cell.n) as usize;
                let t = subdivide(
                    &build_bqp(p, &p0).map_err(|e| e.to_string())?,
                    cell.b as usize,
                    1,
                    extra,
                )
                .map_err(|e| e.to_string())?;
                let (d1, d2) = d_words(&t, cell.b as usize).map_err(|e| e.to_string())?;
                let u = word_to_step_seq(p);
                let u0 = word_to_step_seq(&p0);
                if d1 != gamma_ii(u.entries(), cell.b).map_err(|e| e.to_string())? {
                    return Err(String::from("the first strided tuple misses the path"));
                }
                if d2 != gamma_ii(u0.entries(), cell.b).map_err(|e| e.to_string())? {
                    return Err(String::from("the second strided tuple misses the lowest path"));
                }
                Ok(())
            })();
            sweep.record(cell, &p.to_ascii(), verdict);
        }
    }
    Ok(())
}
