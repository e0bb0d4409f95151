//! Routes: vertex sequences traversing arcs forwards or backwards, their
//! signed weights, and the collapse operation that cancels adjacent
//! opposite-direction steps.

use std::fmt;

use thiserror::Error;

use crate::digraph::Digraph;

/// Direction of one step of a route relative to the arc it traverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// The step `v -> w` rides the arc `(v, w)`.
    Forward,
    /// The step `v -> w` rides the arc `(w, v)` against its direction.
    Backward,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Forward => 1,
            Orientation::Backward => -1,
        }
    }

    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Forward => Orientation::Backward,
            Orientation::Backward => Orientation::Forward,
        }
    }

    pub fn from_sign(sign: i64) -> Option<Orientation> {
        match sign {
            1 => Some(Orientation::Forward),
            -1 => Some(Orientation::Backward),
            _ => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RouteError {
    #[error("route with {vertices} vertices needs {} orientations, got {orientations}", vertices - 1)]
    LengthMismatch { vertices: usize, orientations: usize },
    #[error("route must visit at least one vertex")]
    Empty,
    #[error("step {step} from {from} to {to} ({orientation:?}) does not follow an arc")]
    InvalidStep { step: usize, from: usize, to: usize, orientation: Orientation },
    #[error("cannot compose: first route ends at {end}, second starts at {start}")]
    EndpointMismatch { end: usize, start: usize },
    #[error("route is not closed (starts at {start}, ends at {end})")]
    NotClosed { start: usize, end: usize },
    #[error("route is uniformly oriented; no adjacent opposite pair to collapse")]
    NothingToCollapse,
}

/// A route: vertices `v_0 .. v_n` together with one [`Orientation`] per step.
///
/// A route of length 0 is a single vertex. Routes only make sense relative
/// to a digraph; [`Route::validate`] checks each step against the arc set.
/// The output of [`Route::collapse`] identifies vertices, so it is a route
/// shape that may no longer be valid in the original digraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Route {
    vertices: Vec<usize>,
    orientations: Vec<Orientation>,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices[0])?;
        for (v, o) in self.vertices[1..].iter().zip(&self.orientations) {
            let arrow = match o {
                Orientation::Forward => "->",
                Orientation::Backward => "<-",
            };
            write!(f, " {arrow} {v}")?;
        }
        Ok(())
    }
}

impl Route {
    pub fn new(vertices: Vec<usize>, orientations: Vec<Orientation>) -> Result<Self, RouteError> {
        if vertices.is_empty() {
            return Err(RouteError::Empty);
        }
        if orientations.len() != vertices.len() - 1 {
            return Err(RouteError::LengthMismatch {
                vertices: vertices.len(),
                orientations: orientations.len(),
            });
        }
        Ok(Route { vertices, orientations })
    }

    /// Builds a route from `±1` step signs.
    pub fn from_signs(vertices: Vec<usize>, signs: &[i64]) -> Result<Self, RouteError> {
        let orientations = signs
            .iter()
            .map(|&s| Orientation::from_sign(s))
            .collect::<Option<Vec<_>>>()
            .ok_or(RouteError::LengthMismatch {
                vertices: vertices.len(),
                orientations: signs.len(),
            })?;
        Route::new(vertices, orientations)
    }

    /// The route consisting of a single vertex and no steps.
    pub fn trivial(vertex: usize) -> Self {
        Route { vertices: vec![vertex], orientations: Vec::new() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orientations
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.orientations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orientations.is_empty()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    /// Closed and with all vertices except the repeated endpoint pairwise
    /// distinct.
    pub fn is_unrepeated_closed(&self) -> bool {
        if !self.is_closed() {
            return false;
        }
        let interior = &self.vertices[..self.vertices.len() - 1];
        let mut sorted = interior.to_vec();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Checks every step against the arc set of `g`.
    pub fn validate(&self, g: &Digraph) -> Result<(), RouteError> {
        for (i, (w, o)) in self.vertices[1..].iter().zip(&self.orientations).enumerate() {
            let v = self.vertices[i];
            let ok = match o {
                Orientation::Forward => g.has_arc(v, *w),
                Orientation::Backward => g.has_arc(*w, v),
            };
            if !ok {
                return Err(RouteError::InvalidStep { step: i + 1, from: v, to: *w, orientation: *o });
            }
        }
        Ok(())
    }

    /// The signed weight: forward steps count `+1`, backward steps `-1`.
    pub fn weight(&self) -> i64 {
        self.orientations.iter().map(|o| o.sign()).sum()
    }

    /// Concatenation; the first route must end where the second starts.
    /// Weights add.
    pub fn compose(&self, other: &Route) -> Result<Route, RouteError> {
        if self.end() != other.start() {
            return Err(RouteError::EndpointMismatch { end: self.end(), start: other.start() });
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut orientations = self.orientations.clone();
        orientations.extend_from_slice(&other.orientations);
        Ok(Route { vertices, orientations })
    }

    /// The same steps walked in reverse; the weight negates.
    pub fn inverse(&self) -> Route {
        let vertices: Vec<usize> = self.vertices.iter().rev().copied().collect();
        let orientations: Vec<Orientation> =
            self.orientations.iter().rev().map(|o| o.flip()).collect();
        Route { vertices, orientations }
    }

    /// The rotation of a closed route starting at step offset `k`.
    pub fn rotate(&self, k: usize) -> Result<Route, RouteError> {
        if !self.is_closed() {
            return Err(RouteError::NotClosed { start: self.start(), end: self.end() });
        }
        let n = self.len();
        if n == 0 {
            return Ok(self.clone());
        }
        let k = k % n;
        let mut vertices = Vec::with_capacity(n + 1);
        for i in 0..=n {
            vertices.push(self.vertices[(k + i) % n]);
        }
        let mut orientations = Vec::with_capacity(n);
        for i in 0..n {
            orientations.push(self.orientations[(k + i) % n]);
        }
        Ok(Route { vertices, orientations })
    }

    /// Cancels the first adjacent pair of opposite-orientation steps of a
    /// closed route, dropping the middle vertex and identifying the two
    /// endpoints of the pair. Length drops by 2 and the weight is unchanged.
    pub fn collapse(&self) -> Result<Route, RouteError> {
        if !self.is_closed() {
            return Err(RouteError::NotClosed { start: self.start(), end: self.end() });
        }
        let pair = self
            .orientations
            .windows(2)
            .position(|w| w[0] != w[1])
            .ok_or(RouteError::NothingToCollapse)?;
        // Steps pair and pair+1 cover vertices v_pair, v_pair+1, v_pair+2;
        // the elided positions keep the label of v_pair.
        let mut vertices = self.vertices.clone();
        vertices.drain(pair + 1..pair + 3);
        let mut orientations = self.orientations.clone();
        orientations.drain(pair..pair + 2);
        // Closing vertex label may have been elided when the pair sat at the end.
        if let Some(last) = vertices.last_mut() {
            if vertices.len() > 1 {
                *last = vertices[0];
            }
        }
        if vertices.len() == 1 {
            return Ok(Route::trivial(vertices[0]));
        }
        Ok(Route { vertices, orientations })
    }

    /// Collapses a closed route until no opposite pair remains and returns
    /// the final length, which equals the absolute weight.
    pub fn collapse_to_cycle(&self) -> Result<usize, RouteError> {
        if !self.is_closed() {
            return Err(RouteError::NotClosed { start: self.start(), end: self.end() });
        }
        let mut current = self.clone();
        loop {
            match current.collapse() {
                Ok(next) => current = next,
                Err(RouteError::NothingToCollapse) => return Ok(current.len()),
                Err(e) => return Err(e),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::Orientation::{Backward, Forward};
    use super::*;

    #[test]
    fn weight_examples() {
        let around_c3 = Route::from_signs(vec![0, 1, 2, 0], &[1, 1, 1]).unwrap();
        assert_eq!(around_c3.weight(), 3);
        around_c3.validate(&Digraph::cycle(3)).unwrap();

        let there_and_back = Route::from_signs(vec![0, 1, 0], &[1, -1]).unwrap();
        assert_eq!(there_and_back.weight(), 0);

        let g = Digraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let chord = Route::from_signs(vec![0, 1, 2, 0], &[1, 1, -1]).unwrap();
        chord.validate(&g).unwrap();
        assert_eq!(chord.weight(), 1);
    }

    #[test]
    fn validation_rejects_missing_arcs() {
        let g = Digraph::cycle(3);
        let bad = Route::from_signs(vec![0, 2], &[1]).unwrap();
        assert!(matches!(bad.validate(&g), Err(RouteError::InvalidStep { .. })));
        // 0 -> 2 backward rides the arc (2, 0), which exists.
        let ok = Route::from_signs(vec![0, 2], &[-1]).unwrap();
        ok.validate(&g).unwrap();
    }

    #[test]
    fn compose_adds_weights_and_checks_endpoints() {
        let r1 = Route::from_signs(vec![0, 1, 2], &[1, 1]).unwrap();
        let r2 = Route::from_signs(vec![2, 1], &[-1]).unwrap();
        let composed = r1.compose(&r2).unwrap();
        assert_eq!(composed.weight(), r1.weight() + r2.weight());
        assert_eq!(composed.vertices(), &[0, 1, 2, 1]);

        assert!(matches!(
            r2.compose(&r2),
            Err(RouteError::EndpointMismatch { end: 1, start: 2 })
        ));
    }

    #[test]
    fn inverse_negates_weight_and_closes_to_zero() {
        let r = Route::from_signs(vec![0, 1, 2, 3], &[1, 1, 1]).unwrap();
        assert_eq!(r.inverse().weight(), -3);
        let loop_route = r.compose(&r.inverse()).unwrap();
        assert!(loop_route.is_closed());
        assert_eq!(loop_route.weight(), 0);
    }

    #[test]
    fn collapse_single_pair_to_trivial() {
        let r = Route::new(vec![0, 1, 0], vec![Forward, Backward]).unwrap();
        let collapsed = r.collapse().unwrap();
        assert_eq!(collapsed, Route::trivial(0));
    }

    #[test]
    fn collapse_preserves_weight() {
        let r = Route::from_signs(vec![0, 1, 2, 0], &[1, 1, -1]).unwrap();
        let collapsed = r.collapse().unwrap();
        assert_eq!(collapsed.len(), 1);
        assert_eq!(collapsed.weight(), 1);
        assert!(collapsed.is_closed());
    }

    #[test]
    fn collapse_requires_mixed_orientations() {
        let r = Route::from_signs(vec![0, 1, 2, 0], &[1, 1, 1]).unwrap();
        assert_eq!(r.collapse(), Err(RouteError::NothingToCollapse));
        assert_eq!(r.collapse_to_cycle().unwrap(), 3);
    }

    #[test]
    fn collapse_to_cycle_reaches_absolute_weight() {
        let r = Route::from_signs(vec![0, 1, 2, 3, 1, 0], &[1, 1, -1, -1, -1]).unwrap();
        assert_eq!(r.weight(), -1);
        assert_eq!(r.collapse_to_cycle().unwrap(), 1);

        let zero = Route::from_signs(vec![0, 1, 2, 1, 0], &[1, 1, -1, -1]).unwrap();
        assert_eq!(zero.collapse_to_cycle().unwrap(), 0);
    }

    #[test]
    fn rotation_keeps_weight_and_class() {
        let r = Route::from_signs(vec![0, 1, 2, 0], &[1, 1, -1]).unwrap();
        let rotated = r.rotate(1).unwrap();
        assert_eq!(rotated.vertices(), &[1, 2, 0, 1]);
        assert_eq!(rotated.weight(), r.weight());
    }
}
