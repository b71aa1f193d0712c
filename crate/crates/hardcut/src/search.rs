//! Minimum-area volume-balanced cuts of a handlebody model: exhaustive at
//! tiny scale, eigenvector sweep plus seeded local search beyond that.
//!
//! Every method uses the same deterministic tie-breaking: smaller area,
//! then smaller subset, then lexicographically smaller membership vector.
//! Balance is in vertex-count units, since a binary cut cannot split cells.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge_boundary, VertexCut, ENUMERATION_LIMIT};
use crate::handlebody::HandlebodyModel;
use crate::spectral;

/// Applied-move budget for one local search run, per vertex.
const MOVES_PER_VERTEX: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMethod {
    Exact,
    SpectralSweep,
    LocalSearch,
    RandomRestart,
}

impl SearchMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SearchMethod::Exact => "exact",
            SearchMethod::SpectralSweep => "spectral_sweep",
            SearchMethod::LocalSearch => "local_search",
            SearchMethod::RandomRestart => "random_restart",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutResult {
    pub cut: VertexCut,
    pub area: f64,
    pub side_volumes: (f64, f64),
    pub method: SearchMethod,
    /// Candidate cuts examined along the way.
    pub evaluations: u64,
}

impl CutResult {
    pub fn to_text(&self) -> String {
        format!(
            "method = {}\narea = {}\nsize = {}\nmembership = {}\nevaluations = {}\n",
            self.method.name(),
            self.area,
            self.cut.size(),
            self.cut,
            self.evaluations
        )
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(eps))
    }
}

/// Per-size balance table: `balanced[k]` says a k-vertex side and its
/// complement both exceed the epsilon share of the volume. Uses the same
/// arithmetic as the model's own balance predicate.
fn balanced_sizes(model: &HandlebodyModel, eps: f64) -> Vec<bool> {
    let m = model.vertex_count();
    let vv = model.params().vertex_volume;
    let threshold = eps * model.params().total_volume;
    (0..=m)
        .map(|k| k as f64 * vv > threshold && (m - k) as f64 * vv > threshold)
        .collect()
}

/// `true` if membership vector `a` precedes `b` reading from vertex 0.
fn lex_before(a: &[bool], b: &[bool]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return !*x;
        }
    }
    false
}

/// Strictly better under (area via boundary count, size, lexicographic).
fn better(boundary: usize, cut: &[bool], best_boundary: usize, best_cut: &[bool]) -> bool {
    let size = cut.iter().filter(|&&b| b).count();
    let best_size = best_cut.iter().filter(|&&b| b).count();
    (boundary, size) < (best_boundary, best_size)
        || (boundary == best_boundary && size == best_size && lex_before(cut, best_cut))
}

fn result_from(
    model: &HandlebodyModel,
    membership: Vec<bool>,
    method: SearchMethod,
    evaluations: u64,
) -> CutResult {
    let cut = VertexCut::new(membership);
    let area = edge_boundary(model.graph(), &cut) as f64 * model.params().cut_disc_area;
    let side_volumes = model.side_volumes(&cut);
    CutResult { cut, area, side_volumes, method, evaluations }
}

/// Global minimum over all balanced binary cuts, by enumeration.
pub fn exact_balanced_min_cut(model: &HandlebodyModel, eps: f64) -> Result<CutResult> {
    check_eps(eps)?;
    let m = model.vertex_count();
    if m > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { vertex_count: m, limit: ENUMERATION_LIMIT });
    }
    let balanced = balanced_sizes(model, eps);
    let edges = model.graph().edges();
    let mut best: Option<(usize, u32)> = None;
    let mut evaluations = 0u64;
    for mask in 1u32..(1u32 << m) - 1 {
        if !balanced[mask.count_ones() as usize] {
            continue;
        }
        evaluations += 1;
        let b = edges
            .iter()
            .filter(|&&(u, v)| (mask >> u ^ mask >> v) & 1 == 1)
            .count();
        let replace = match best {
            None => true,
            Some((bb, bm)) => {
                let (k, bk) = (mask.count_ones(), bm.count_ones());
                (b, k) < (bb, bk) || (b == bb && k == bk && mask_lex_before(mask, bm))
            }
        };
        if replace {
            best = Some((b, mask));
        }
    }
    let (_, mask) = best.ok_or(Error::NoBalancedCut)?;
    let membership = (0..m).map(|i| mask >> i & 1 == 1).collect();
    Ok(result_from(model, membership, SearchMethod::Exact, evaluations))
}

fn mask_lex_before(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    diff != 0 && a >> diff.trailing_zeros() & 1 == 0
}

/// Best balanced prefix cut in the order of the second adjacency
/// eigenvector's entries (ties in the entries broken by vertex index).
pub fn spectral_sweep_cut(model: &HandlebodyModel, eps: f64) -> Result<CutResult> {
    check_eps(eps)?;
    let m = model.vertex_count();
    let balanced = balanced_sizes(model, eps);
    if !balanced.iter().any(|&b| b) {
        return Err(Error::NoBalancedCut);
    }
    let pair = spectral::second_adjacency_eigenpair(model.graph(), 3)?;
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        pair.vector[a]
            .partial_cmp(&pair.vector[b])
            .expect("eigenvector entries are finite")
            .then(a.cmp(&b))
    });

    let adj = model.graph().adjacency();
    let mut membership = vec![false; m];
    let mut boundary = 0usize;
    let mut evaluations = 0u64;
    let mut best: Option<(usize, Vec<bool>)> = None;
    for (idx, &v) in order.iter().enumerate() {
        // Adding v turns its edges into S internal and the rest boundary.
        let into_s = adj[v].iter().filter(|&&w| membership[w]).count();
        boundary = boundary + adj[v].len() - 2 * into_s;
        membership[v] = true;
        let k = idx + 1;
        if k == m || !balanced[k] {
            continue;
        }
        evaluations += 1;
        let replace = match &best {
            None => true,
            Some((bb, bm)) => better(boundary, &membership, *bb, bm),
        };
        if replace {
            best = Some((boundary, membership.clone()));
        }
    }
    let (_, membership) = best.ok_or(Error::NoBalancedCut)?;
    Ok(result_from(model, membership, SearchMethod::SpectralSweep, evaluations))
}

/// Incremental cut state for local search: membership, per-vertex count of
/// edges to the other side, and the total boundary.
struct CutState {
    membership: Vec<bool>,
    cross: Vec<usize>,
    boundary: usize,
    size: usize,
}

impl CutState {
    fn new(model: &HandlebodyModel, membership: Vec<bool>) -> Self {
        let adj = model.graph().adjacency();
        let cross: Vec<usize> = (0..membership.len())
            .map(|v| adj[v].iter().filter(|&&w| membership[w] != membership[v]).count())
            .collect();
        let boundary = membership
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b)
            .map(|(v, _)| cross[v])
            .sum();
        let size = membership.iter().filter(|&&b| b).count();
        Self { membership, cross, boundary, size }
    }

    /// Boundary change if `v` switches sides: `deg(v) - 2 cross(v)`.
    fn flip_delta(&self, v: usize, degree: usize) -> i64 {
        degree as i64 - 2 * self.cross[v] as i64
    }

    fn flip(&mut self, v: usize, adj: &[Vec<usize>]) {
        self.boundary = (self.boundary as i64 + self.flip_delta(v, adj[v].len())) as usize;
        for &w in &adj[v] {
            if self.membership[w] == self.membership[v] {
                self.cross[w] += 1;
            } else {
                self.cross[w] -= 1;
            }
        }
        self.cross[v] = adj[v].len() - self.cross[v];
        self.size = if self.membership[v] { self.size - 1 } else { self.size + 1 };
        self.membership[v] = !self.membership[v];
    }
}

/// First-improvement refinement of a balanced start: single flips that keep
/// balance, then side swaps once flips stall. Never increases area and is
/// deterministic in `(start, seed)`.
pub fn local_search_refine(
    model: &HandlebodyModel,
    start: &VertexCut,
    eps: f64,
    seed: u64,
) -> Result<CutResult> {
    check_eps(eps)?;
    let m = model.vertex_count();
    assert_eq!(start.len(), m, "start length must match vertex count");
    if !model.is_balanced(start, eps) {
        return Err(Error::UnbalancedStart);
    }
    let balanced = balanced_sizes(model, eps);
    let adj = model.graph().adjacency();
    let mut state = CutState::new(model, start.membership().to_vec());

    let mut order: Vec<usize> = (0..m).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let budget = MOVES_PER_VERTEX * m;
    let mut moves = 0usize;
    let mut evaluations = 0u64;
    'passes: while moves < budget {
        let mut improved = false;
        for &v in &order {
            evaluations += 1;
            let new_size = if state.membership[v] { state.size - 1 } else { state.size + 1 };
            if !balanced[new_size] || state.flip_delta(v, 3) >= 0 {
                continue;
            }
            state.flip(v, &adj);
            moves += 1;
            improved = true;
            if moves >= budget {
                break 'passes;
            }
        }
        if improved {
            continue;
        }
        // Swaps keep sizes fixed; only boundary-boundary pairs can help.
        'swap: for &u in &order {
            if !state.membership[u] || state.cross[u] == 0 {
                continue;
            }
            for &v in &order {
                if state.membership[v] || state.cross[v] == 0 {
                    continue;
                }
                evaluations += 1;
                let mult = adj[u].iter().filter(|&&w| w == v).count() as i64;
                let delta = 6 - 2 * state.cross[u] as i64 - 2 * state.cross[v] as i64 + 2 * mult;
                if delta < 0 {
                    state.flip(u, &adj);
                    state.flip(v, &adj);
                    moves += 1;
                    improved = true;
                    break 'swap;
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok(result_from(model, state.membership, SearchMethod::LocalSearch, evaluations))
}

/// Best of: the refined sweep cut, plus `restarts - 1` refined random
/// balanced starts. Restart `i` gets an independent sub-seed; restart 0 is
/// the sweep refined with `seed` itself.
pub fn randomized_search(
    model: &HandlebodyModel,
    eps: f64,
    restarts: usize,
    seed: u64,
) -> Result<CutResult> {
    check_eps(eps)?;
    if restarts == 0 {
        return Err(Error::InvalidArgument("restarts must be at least 1".into()));
    }
    let m = model.vertex_count();
    let balanced = balanced_sizes(model, eps);
    let sizes: Vec<usize> = (0..=m).filter(|&k| balanced[k]).collect();
    if sizes.is_empty() {
        return Err(Error::NoBalancedCut);
    }

    let sweep = spectral_sweep_cut(model, eps)?;
    let mut evaluations = sweep.evaluations;
    let refined = local_search_refine(model, &sweep.cut, eps, seed)?;
    evaluations += refined.evaluations;
    let mut best = refined;

    let mut seeder = ChaCha8Rng::seed_from_u64(seed);
    for _ in 1..restarts {
        let sub_seed: u64 = seeder.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed);
        let k = sizes[rng.gen_range(0..sizes.len())];
        let picked = rand::seq::index::sample(&mut rng, m, k);
        let mut membership = vec![false; m];
        for i in picked {
            membership[i] = true;
        }
        evaluations += 1;
        let start = VertexCut::new(membership);
        let candidate = local_search_refine(model, &start, eps, sub_seed)?;
        evaluations += candidate.evaluations;
        let cand_boundary = edge_boundary(model.graph(), &candidate.cut);
        let best_boundary = edge_boundary(model.graph(), &best.cut);
        if better(cand_boundary, candidate.cut.membership(), best_boundary, best.cut.membership()) {
            best = candidate;
        }
    }
    best.method = SearchMethod::RandomRestart;
    best.evaluations = evaluations;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_regular, Multigraph};
    use crate::handlebody::build_model;

    fn k4_model() -> HandlebodyModel {
        let g = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        build_model(g, 2).unwrap()
    }

    #[test]
    fn exact_on_k4_small_eps() {
        let model = k4_model();
        let disc = model.params().cut_disc_area;
        let r = exact_balanced_min_cut(&model, 0.009).unwrap();
        assert_eq!(r.cut.size(), 1);
        assert!((r.area - 3.0 * disc).abs() < 1e-12);
        // Lexicographically smallest singleton membership vector is 0001.
        assert_eq!(r.cut.to_bit_string(), "0001");
    }

    #[test]
    fn exact_on_k4_medium_eps_forces_pairs() {
        // A single vertex carries 1/4 of the volume, not enough above 0.3.
        let model = k4_model();
        let disc = model.params().cut_disc_area;
        let r = exact_balanced_min_cut(&model, 0.3).unwrap();
        assert_eq!(r.cut.size(), 2);
        assert!((r.area - 4.0 * disc).abs() < 1e-12);
    }

    #[test]
    fn exact_no_balanced_cut_for_huge_eps() {
        let model = k4_model();
        assert!(matches!(exact_balanced_min_cut(&model, 0.5), Err(Error::NoBalancedCut)));
    }

    #[test]
    fn exact_guard() {
        let g = generate_regular(26, 3, 0).unwrap();
        let model = build_model(g, 2).unwrap();
        assert!(matches!(exact_balanced_min_cut(&model, 0.009), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn sweep_on_k4_tie_breaks_by_vertex_index() {
        // With eps = 0.3 only two-vertex prefixes are balanced, and the K4
        // eigensolver returns the fixed ramp start, so the order is 0..3.
        let model = k4_model();
        let r = spectral_sweep_cut(&model, 0.3).unwrap();
        assert_eq!(r.cut.members(), vec![0, 1]);
        assert!((r.area - 4.0 * model.params().cut_disc_area).abs() < 1e-12);
    }

    #[test]
    fn sweep_never_beats_exact() {
        for seed in 0..6u64 {
            let g = generate_regular(12, 3, seed).unwrap();
            let model = build_model(g, 2).unwrap();
            let exact = exact_balanced_min_cut(&model, 0.009).unwrap();
            let sweep = spectral_sweep_cut(&model, 0.009).unwrap();
            assert!(sweep.area >= exact.area - 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn refine_from_exact_optimum_keeps_area() {
        let g = generate_regular(10, 3, 2).unwrap();
        let model = build_model(g, 2).unwrap();
        let exact = exact_balanced_min_cut(&model, 0.009).unwrap();
        let refined = local_search_refine(&model, &exact.cut, 0.009, 7).unwrap();
        assert_eq!(refined.area, exact.area);
    }

    #[test]
    fn refine_improves_worst_k4_cut() {
        let model = k4_model();
        let worst = VertexCut::from_indices(4, &[0, 1]);
        let r = local_search_refine(&model, &worst, 0.009, 0).unwrap();
        assert_eq!(r.cut.size(), 1);
        assert!((r.area - 3.0 * model.params().cut_disc_area).abs() < 1e-12);
    }

    #[test]
    fn refine_rejects_unbalanced_start() {
        let model = k4_model();
        let start = VertexCut::from_indices(4, &[0]);
        assert!(matches!(
            local_search_refine(&model, &start, 0.3, 0),
            Err(Error::UnbalancedStart)
        ));
    }

    #[test]
    fn refine_is_deterministic() {
        let g = generate_regular(16, 3, 4).unwrap();
        let model = build_model(g, 2).unwrap();
        let start = VertexCut::from_indices(16, &(0..8).collect::<Vec<_>>());
        let a = local_search_refine(&model, &start, 0.009, 42).unwrap();
        let b = local_search_refine(&model, &start, 0.009, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn refine_never_increases_area() {
        let g = generate_regular(14, 3, 8).unwrap();
        let model = build_model(g, 2).unwrap();
        for seed in 0..10u64 {
            let start = VertexCut::from_indices(14, &[0, 2, 4, 6, 8, 10, 12]);
            let start_area = model.discrete_cut_area(&start).unwrap();
            let r = local_search_refine(&model, &start, 0.009, seed).unwrap();
            assert!(r.area <= start_area + 1e-12);
            assert!(model.is_balanced(&r.cut, 0.009));
        }
    }

    #[test]
    fn single_restart_equals_refined_sweep() {
        let g = generate_regular(12, 3, 6).unwrap();
        let model = build_model(g, 2).unwrap();
        let sweep = spectral_sweep_cut(&model, 0.009).unwrap();
        let refined = local_search_refine(&model, &sweep.cut, 0.009, 99).unwrap();
        let random = randomized_search(&model, 0.009, 1, 99).unwrap();
        assert_eq!(random.cut, refined.cut);
        assert_eq!(random.area, refined.area);
        assert_eq!(random.evaluations, sweep.evaluations + refined.evaluations);
    }

    #[test]
    fn randomized_search_is_reproducible() {
        let g = generate_regular(16, 3, 1).unwrap();
        let model = build_model(g, 2).unwrap();
        let a = randomized_search(&model, 0.009, 8, 5).unwrap();
        let b = randomized_search(&model, 0.009, 8, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn randomized_close_to_exact_on_small_instances() {
        let mut checked = 0;
        for (m, seed) in [(8usize, 0u64), (10, 1), (12, 2), (14, 3), (16, 4)] {
            let g = generate_regular(m, 3, seed).unwrap();
            let model = build_model(g, 2).unwrap();
            let exact = exact_balanced_min_cut(&model, 0.009).unwrap();
            let heur = randomized_search(&model, 0.009, 50, seed).unwrap();
            assert!(heur.area <= 1.5 * exact.area + 1e-12, "m={m} seed={seed}");
            checked += 1;
        }
        assert_eq!(checked, 5);
    }

    #[test]
    fn results_recompute_and_beat_the_bound() {
        for seed in 0..5u64 {
            let g = generate_regular(12, 3, seed).unwrap();
            let model = build_model(g, 2).unwrap();
            let bound = model.theorem_bound(0.009).unwrap();
            for r in [
                exact_balanced_min_cut(&model, 0.009).unwrap(),
                spectral_sweep_cut(&model, 0.009).unwrap(),
                randomized_search(&model, 0.009, 4, seed).unwrap(),
            ] {
                let recomputed =
                    edge_boundary(model.graph(), &r.cut) as f64 * model.params().cut_disc_area;
                assert_eq!(r.area, recomputed);
                assert!(model.is_balanced(&r.cut, 0.009));
                assert!(r.area >= bound);
                let (a, b) = r.side_volumes;
                let total = model.params().total_volume;
                assert!(a > 0.009 * total && b > 0.009 * total);
            }
        }
    }

    #[test]
    fn zero_restarts_is_an_error() {
        let model = k4_model();
        assert!(matches!(
            randomized_search(&model, 0.009, 0, 0),
            Err(Error::InvalidArgument(_))
        ));
    }
}
