use crate::bounds;
use crate::cats::{FatCat, ThinCat};
use crate::game::Transcript;
use crate::graph::{sphere, DistanceOracle, SpiderLayout};
use crate::mice::SpiderMouse;

/// Checks the elimination cat's round recurrence
/// `d(u_{w_{i+1}}, m_{2i+1}) <= d(u_{w_i}, m_{2i-1}) + 2`, its endgame
/// `d(u_{w_L}, m_{2L-1}) <= 4L + k`, and `rad_G(M_{2L-1}) <= 4L + k` when
/// beliefs were tracked. The game must have reached step `2L - 1`.
pub fn check_fat_claim(oracle: &DistanceOracle, fat: &FatCat, tr: &Transcript) -> Result<(), String> {
    let l = fat.count();
    let step = fat.decision_step();
    if tr.steps() < step {
        return Err(format!("game stopped at {} before step {step}", tr.steps()));
    }
    let w = fat.champion_history();
    if w.len() != l {
        return Err(format!("{} champions recorded, expected {l}", w.len()));
    }
    let u = fat.centers();
    let gap = |i: usize| oracle.dist(u[w[i - 1]], tr.m(2 * i - 1));
    for i in 1..l {
        if w[i] != w[i - 1] && w[i] != i {
            return Err(format!("w_{} = {} is neither w_{i} nor {}", i + 1, w[i] + 1, i + 1));
        }
        if gap(i + 1) > gap(i) + 2 {
            return Err(format!("round {i}: distance {} grew past {} + 2", gap(i + 1), gap(i)));
        }
    }
    let bound = fat.guarantee();
    if gap(l) > bound {
        return Err(format!("d(u_wL, m_{step}) = {} > 4L + k = {bound}", gap(l)));
    }
    if let Some(r) = tr.radius(step) {
        if r > bound {
            return Err(format!("rad(M_{step}) = {r} > 4L + k = {bound}"));
        }
    }
    Ok(())
}

/// What [`check_thin_phases`] verified.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ThinCheck {
    pub phases: usize,
    pub transitions: usize,
    /// Settled phases whose distance was checked: `T_j >= ceil(D/2)`, or a
    /// held anchor with an empty sphere.
    pub settled: usize,
}

/// Checks the sphere-walk phases of a finished game:
/// the budget `T_{j+1} - T_j = |S_j|` with `4 |S_j| < l(v_j)`; the phase
/// inequality on `G_j = d(v_j, m_{2T_j - 1})` (read as `m_1` for `T_1 = 0`):
/// `G_{j+1} <= G_j - l(v_j)/2` when `G_j >= K`, and `G_{j+1} <= 3K/2`
/// otherwise; and `G_j <= ceil(3K/2)` once `T_j >= ceil(D/2)` or the anchor
/// is held because its sphere is empty.
pub fn check_thin_phases(oracle: &DistanceOracle, thin: &ThinCat, tr: &Transcript) -> Result<ThinCheck, String> {
    let k = thin.k() as i64;
    let phases = thin.phases();
    let time = |pairs: usize| (2 * pairs).saturating_sub(1).max(1);
    let g = |j: usize| -> Option<i64> {
        let t = time(phases[j].start_pairs);
        (t <= tr.steps()).then(|| oracle.dist(phases[j].anchor, tr.m(t)) as i64)
    };
    let mut out = ThinCheck { phases: phases.len(), ..Default::default() };
    for (j, p) in phases.iter().enumerate() {
        if let Some(end) = p.end_pairs {
            let size = sphere(oracle, p.anchor, p.level).len();
            if end - p.start_pairs != size || 4 * size >= p.level as usize {
                return Err(format!("phase {}: {} pairs for a sphere of {size} at level {}", j + 1, end - p.start_pairs, p.level));
            }
        }
        if j + 1 < phases.len() {
            if let (Some(a), Some(b)) = (g(j), g(j + 1)) {
                out.transitions += 1;
                let ok = if a >= k { 2 * b <= 2 * a - p.level as i64 } else { 2 * b <= 3 * k };
                if !ok {
                    return Err(format!(
                        "phase {} -> {}: G = {a} -> {b} with level {} and K = {k}",
                        j + 1,
                        j + 2,
                        p.level
                    ));
                }
            }
        }
        // Settled: the pair budget is spent, or the anchor's sphere is empty
        // and the cat holds it for good.
        let empty_hold = p.end_pairs.is_none() && sphere(oracle, p.anchor, p.level).is_empty();
        if p.start_pairs >= thin.target_pairs() || empty_hold {
            if let Some(a) = g(j) {
                out.settled += 1;
                if a > bounds::three_halves(thin.k()) as i64 {
                    return Err(format!("phase {}: settled distance {a} > ceil(3K/2)", j + 1));
                }
            }
        }
    }
    Ok(out)
}

/// Checks one spider-mouse game: `rad_G(M_i) > t/12` at every step, plus the
/// shadow, separation, safety and drift-window invariants. Needs the belief
/// sets kept.
pub fn check_spider_run(oracle: &DistanceOracle, mouse: &SpiderMouse, tr: &Transcript) -> Result<(), String> {
    let t = mouse.t();
    let layout: SpiderLayout = mouse.layout();
    let w = mouse.shadow_history();
    for i in 1..=tr.steps() {
        let r = tr.radius(i).ok_or("beliefs were not tracked")?;
        if r as usize <= t / 12 {
            return Err(format!("step {i}: rad(M_i) = {r} <= t/12"));
        }
        let (m, wi) = (tr.m(i), w[i - 1]);
        if let Some(set) = tr.belief_set(i) {
            if !set.contains(wi) {
                return Err(format!("step {i}: shadow {wi} not in M_i"));
            }
        }
        let gap = oracle.dist(m, wi) as usize;
        let ok = if m == SpiderLayout::CENTER { gap >= t / 6 } else { gap > t / 6 };
        if !ok {
            return Err(format!("step {i}: d(m, w) = {gap}"));
        }
        if layout.branch_of(m) == Some(layout.padding_branch()) {
            return Err(format!("step {i}: mouse entered the padding branch"));
        }
    }
    for p in mouse.protected_windows() {
        if let Some(i) = (p.from..=p.to.min(tr.steps())).find(|&i| layout.branch_of(tr.c(i)) == Some(p.branch)) {
            return Err(format!("step {i}: cat queried protected branch {}", p.branch));
        }
    }
    if let Some(g) = mouse.drift_end_gaps().iter().find(|&&g| !(t / 3..=2 * t / 3).contains(&g)) {
        return Err(format!("drift ended with d(m, w) = {g}"));
    }
    Ok(())
}
