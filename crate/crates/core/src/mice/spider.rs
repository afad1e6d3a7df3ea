use std::collections::BTreeSet;

use super::MouseError;
use crate::game::{MouseStrategy, MouseView, StrategyError};
use crate::graph::{gen_spider, Graph, SpiderLayout, SpiderSpec, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Initial placement at depth `t/4` (time 1).
    Setup,
    /// `t/6` steps of reacting to whether the cat moved toward the center.
    Drift,
    /// `d` steps straight to the center.
    RunIn,
    /// At the center; the next move picks a fresh branch.
    Switch,
    /// `t/4` steps outward on the fresh branch.
    RunOut,
    /// Back at depth `t/4`; the shadow is re-anchored. Congruent to `Setup`.
    Reset,
}

/// Branch-agnostic half of the strategy: depths of the real and shadow
/// trajectories and the stage clock. The cat's queries influence it only
/// through their distances to the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiderPlan {
    t: usize,
    pub stage: Stage,
    clock: usize,
    pub m_depth: usize,
    pub w_depth: usize,
    /// `d`: depth of the real mouse when drifting ends.
    pub run_in: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Event {
    Moved,
    /// This move left the center onto the fresh branch.
    LeftCenter,
    /// This move completed the outward run.
    CycleEnd,
}

impl SpiderPlan {
    pub fn new(t: usize) -> Self {
        SpiderPlan { t, stage: Stage::Setup, clock: 0, m_depth: t / 4, w_depth: t / 4, run_in: 0 }
    }

    /// One move, given the distances to the center of the previous and the
    /// upcoming cat query.
    fn advance(&mut self, prev_query_depth: usize, query_depth: usize) -> Event {
        let t = self.t;
        match self.stage {
            Stage::Setup | Stage::Reset => {
                self.stage = Stage::Drift;
                self.clock = 0;
                self.advance(prev_query_depth, query_depth)
            }
            Stage::Drift if self.clock < t / 6 => {
                // Equality counts as "toward the center".
                if query_depth <= prev_query_depth {
                    self.m_depth -= 1;
                } else {
                    self.w_depth += 1;
                }
                self.clock += 1;
                if self.clock == t / 6 {
                    self.run_in = self.m_depth;
                }
                Event::Moved
            }
            Stage::Drift => {
                self.stage = Stage::RunIn;
                self.clock = 0;
                self.advance(prev_query_depth, query_depth)
            }
            Stage::RunIn => {
                self.m_depth -= 1;
                self.w_depth -= 1;
                self.clock += 1;
                if self.m_depth == 0 {
                    self.stage = Stage::Switch;
                }
                Event::Moved
            }
            Stage::Switch => {
                self.stage = Stage::RunOut;
                self.m_depth = 1;
                self.w_depth += 1;
                self.clock = 1;
                self.finish_run_out(Event::LeftCenter)
            }
            Stage::RunOut => {
                self.m_depth += 1;
                self.w_depth += 1;
                self.clock += 1;
                self.finish_run_out(Event::Moved)
            }
        }
    }

    fn finish_run_out(&mut self, event: Event) -> Event {
        if self.clock == self.t / 4 {
            self.stage = Stage::Reset;
            Event::CycleEnd
        } else {
            event
        }
    }
}

/// A branch that must stay unqueried over an inclusive time window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProtectedWindow {
    pub branch: usize,
    pub from: usize,
    pub to: usize,
}

/// The adversarial mouse on a spider with `12 | t`.
///
/// It keeps a second consistent trajectory (the shadow) more than `t/6` away
/// from its real position, on a different branch, so the belief radius stays
/// above `t/12`. Branches are chosen by simulating a copy of the cat against
/// the bits the mouse's own plan will produce.
#[derive(Debug, Clone)]
pub struct SpiderMouse {
    layout: SpiderLayout,
    plan: SpiderPlan,
    m_branch: usize,
    w_branch: usize,
    /// Time of the first outward move in the current cycle.
    run_out_from: usize,
    shadow: Vec<Vertex>,
    stages: Vec<Stage>,
    protected: Vec<ProtectedWindow>,
    /// `d(m, w)` at the end of each drift stage.
    drift_end_gaps: Vec<usize>,
}

impl SpiderMouse {
    /// Checks that `graph` is exactly the generated spider with parameter `t`
    /// (plus any padding branch).
    pub fn new(graph: &Graph, t: usize) -> Result<Self, MouseError> {
        if t < 12 || !t.is_multiple_of(12) {
            return Err(MouseError::BadParameter(format!("t = {t} must be a positive multiple of 12")));
        }
        let main = t * t + 1;
        if graph.n() < main {
            return Err(MouseError::NotASpider { t });
        }
        let spec = SpiderSpec { t, extra: graph.n() - main };
        if gen_spider(spec).ok().as_ref() != Some(graph) {
            return Err(MouseError::NotASpider { t });
        }
        Ok(SpiderMouse {
            layout: SpiderLayout::new(spec),
            plan: SpiderPlan::new(t),
            m_branch: 0,
            w_branch: 0,
            run_out_from: 0,
            shadow: Vec::new(),
            stages: Vec::new(),
            protected: Vec::new(),
            drift_end_gaps: Vec::new(),
        })
    }

    pub fn t(&self) -> usize {
        self.layout.t
    }

    pub fn layout(&self) -> SpiderLayout {
        self.layout
    }

    /// Shadow positions `w_1, w_2, ...`.
    pub fn shadow_history(&self) -> &[Vertex] {
        &self.shadow
    }

    /// Stage of each move, `stage_history()[i - 1]` for time `i`.
    pub fn stage_history(&self) -> &[Stage] {
        &self.stages
    }

    pub fn protected_windows(&self) -> &[ProtectedWindow] {
        &self.protected
    }

    pub fn drift_end_gaps(&self) -> &[usize] {
        &self.drift_end_gaps
    }

    pub fn plan(&self) -> &SpiderPlan {
        &self.plan
    }

    fn at(&self, branch: usize, depth: usize) -> Vertex {
        if depth == 0 {
            SpiderLayout::CENTER
        } else {
            self.layout.vertex(branch, depth)
        }
    }

    /// The cat's next `window` queries starting with `c_step`, assuming the
    /// mouse follows its plan on a branch the cat never touches.
    pub fn simulate_queries(&self, view: &MouseView<'_>, window: usize) -> Vec<Vertex> {
        let depth = |v: Vertex| self.layout.depth(v);
        let mut cat = view.lookahead();
        let mut pending = view.pending_bit();
        let mut plan = self.plan.clone();
        let mut prev = view.last_query().map(|c| (depth(c), plan.m_depth));
        let mut out = Vec::with_capacity(window);
        for _ in 0..window {
            let c = cat.query(pending);
            let dc = depth(c);
            if let Some((dc_prev, _)) = prev {
                plan.advance(dc_prev, dc);
            }
            let dm = plan.m_depth;
            pending = prev.map(|(dc_prev, dm_prev)| dc + dm <= dc_prev + dm_prev);
            prev = Some((dc, dm));
            out.push(c);
        }
        out
    }

    /// Lowest main branch that is neither excluded nor touched by the cat's
    /// next `window` queries (starting with `c_step`) or by `also_avoid`.
    pub fn find_safe_branch(
        &self,
        view: &MouseView<'_>,
        window: usize,
        excluded: &BTreeSet<usize>,
        also_avoid: &[Vertex],
    ) -> Result<usize, MouseError> {
        if window >= self.t() {
            return Err(MouseError::WindowTooLarge { window, t: self.t() });
        }
        let queries = self.simulate_queries(view, window);
        lowest_unqueried_branch(&self.layout, queries.iter().chain(also_avoid).copied(), excluded)
            .ok_or(MouseError::NoSafeBranch { step: view.step, window })
    }

    fn protect(&mut self, branch: usize, from: usize, len: usize) {
        self.protected.push(ProtectedWindow { branch, from, to: from + len - 1 });
    }

    fn setup(&mut self, view: &MouseView<'_>) -> Result<Vertex, MouseError> {
        let t = self.t();
        let window = 2 * t / 3;
        self.m_branch = self.find_safe_branch(view, window, &BTreeSet::new(), &[])?;
        self.w_branch = self.find_safe_branch(view, window, &BTreeSet::from([self.m_branch]), &[])?;
        self.protect(self.m_branch, 1, window);
        self.protect(self.w_branch, 1, window);
        self.shadow.push(self.at(self.w_branch, self.plan.w_depth));
        self.stages.push(Stage::Setup);
        Ok(self.at(self.m_branch, self.plan.m_depth))
    }

    fn step(&mut self, view: &MouseView<'_>) -> Result<Vertex, MouseError> {
        let t = self.t();
        let s = view.step;
        match self.plan.stage {
            Stage::Switch => {
                // Leaving the center at time s: the new branch must stay
                // clear for the next 11t/12 queries.
                let window = 11 * t / 12;
                self.m_branch =
                    self.find_safe_branch(view, window, &BTreeSet::from([self.w_branch]), &[])?;
                self.run_out_from = s;
                self.protect(self.m_branch, s, window);
            }
            Stage::Reset => {
                // Re-anchor the shadow of time s-1 on a branch unqueried
                // since the outward run began and for the next 2t/3 queries.
                let window = 2 * t / 3;
                let past = &view.cat_queries[self.run_out_from - 1..];
                self.w_branch =
                    self.find_safe_branch(view, window, &BTreeSet::from([self.m_branch]), past)?;
                self.plan.w_depth = t / 4;
                *self.shadow.last_mut().unwrap() = self.at(self.w_branch, t / 4);
                self.protect(self.w_branch, self.run_out_from, s + window - self.run_out_from);
            }
            _ => {}
        }
        let depth = |v: Vertex| self.layout.depth(v);
        let prev_query = view.last_query().expect("step >= 2 has a previous query");
        let upcoming = view.upcoming_query();
        let drifting = self.plan.stage == Stage::Drift || self.plan.stage == Stage::Reset;
        self.plan.advance(depth(prev_query), depth(upcoming));
        self.stages.push(self.plan.stage);

        let m = self.at(self.m_branch, self.plan.m_depth);
        let w = self.at(self.w_branch, self.plan.w_depth);
        if drifting && self.plan.stage == Stage::Drift && self.plan.clock == t / 6 {
            self.drift_end_gaps.push(self.plan.m_depth + self.plan.w_depth);
        }
        self.shadow.push(w);
        Ok(m)
    }
}

/// Lowest-id main branch not hit by `queries` and not in `excluded`. The
/// center and the padding branch never count as main branches.
pub fn lowest_unqueried_branch(
    layout: &SpiderLayout,
    queries: impl IntoIterator<Item = Vertex>,
    excluded: &BTreeSet<usize>,
) -> Option<usize> {
    let mut hit = vec![false; layout.t + 2];
    for q in queries {
        if let Some(b) = layout.branch_of(q) {
            hit[b] = true;
        }
    }
    (1..=layout.t).find(|b| !hit[*b] && !excluded.contains(b))
}

impl MouseStrategy for SpiderMouse {
    fn name(&self) -> String {
        format!("spider:t={}", self.t())
    }

    fn first_position(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        self.setup(view).map_err(|e| StrategyError(e.to_string()))
    }

    fn next_move(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        self.step(view).map_err(|e| StrategyError(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_when_the_cat_always_closes_in() {
        // Queries never move away from the center: the mouse walks inward
        // for all of drifting and arrives with d = t/4 - t/6 = t/12.
        let t = 24;
        let mut plan = SpiderPlan::new(t);
        for _ in 0..t / 6 {
            plan.advance(0, 0);
        }
        assert_eq!(plan.stage, Stage::Drift);
        assert_eq!((plan.m_depth, plan.w_depth, plan.run_in), (t / 12, t / 4, t / 12));
        for _ in 0..t / 12 {
            plan.advance(0, 0);
        }
        assert_eq!(plan.stage, Stage::Switch);
        assert_eq!((plan.m_depth, plan.w_depth), (0, t / 6));
        assert_eq!(plan.advance(0, 0), Event::LeftCenter);
        for _ in 1..t / 4 - 1 {
            assert_eq!(plan.advance(0, 0), Event::Moved);
        }
        assert_eq!(plan.advance(0, 0), Event::CycleEnd);
        assert_eq!((plan.m_depth, plan.w_depth), (t / 4, t / 6 + t / 4));
        assert_eq!(plan.stage, Stage::Reset);
    }

    #[test]
    fn plan_when_the_cat_always_moves_out() {
        let t = 12;
        let mut plan = SpiderPlan::new(t);
        for k in 0..t / 6 {
            plan.advance(k, k + 1);
        }
        assert_eq!((plan.m_depth, plan.w_depth, plan.run_in), (t / 4, t / 4 + t / 6, t / 4));
    }

    #[test]
    fn branch_search_skips_center_and_padding() {
        let layout = SpiderLayout::new(SpiderSpec { t: 12, extra: 5 });
        let none = BTreeSet::new();
        assert_eq!(lowest_unqueried_branch(&layout, [0, 0, 150], &none), Some(1));
        assert_eq!(lowest_unqueried_branch(&layout, [1, 13, 30], &none), Some(4));
        assert_eq!(lowest_unqueried_branch(&layout, [], &BTreeSet::from([1, 2])), Some(3));
        let all: Vec<Vertex> = (1..=12).map(|b| layout.vertex(b, 3)).collect();
        assert_eq!(lowest_unqueried_branch(&layout, all, &none), None);
    }
}
