use crate::game::{MouseStrategy, MouseView, StrategyError};
use crate::graph::Vertex;

/// Replays a fixed trajectory, then stays at its last vertex.
#[derive(Debug, Clone)]
pub struct ScriptedMouse {
    path: Vec<Vertex>,
}

impl ScriptedMouse {
    pub fn new(path: Vec<Vertex>) -> Self {
        assert!(!path.is_empty(), "scripted mouse needs at least one position");
        ScriptedMouse { path }
    }

    fn at(&self, step: usize) -> Vertex {
        self.path[(step - 1).min(self.path.len() - 1)]
    }
}

impl MouseStrategy for ScriptedMouse {
    fn name(&self) -> String {
        "scripted".into()
    }

    fn first_position(&mut self, _view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        Ok(self.path[0])
    }

    fn next_move(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        Ok(self.at(view.step))
    }
}
