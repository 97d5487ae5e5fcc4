use crate::error::{Error, Result};

/// Uniform time grid `t_min, t_min + h, …, t_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    points: Vec<f64>,
}

impl TimeGrid {
    pub fn uniform(t_min: f64, t_max: f64, n_points: usize) -> Result<Self> {
        if !t_min.is_finite() || !t_max.is_finite() {
            return Err(Error::InvalidGrid("non-finite end point".into()));
        }
        if n_points < 2 {
            return Err(Error::InvalidGrid(format!("n_points = {n_points} < 2")));
        }
        if !(t_max > t_min) {
            return Err(Error::InvalidGrid(format!(
                "t_max = {t_max} <= t_min = {t_min}"
            )));
        }
        let h = (t_max - t_min) / (n_points - 1) as f64;
        let mut points: Vec<f64> = (0..n_points).map(|k| t_min + h * k as f64).collect();
        points[n_points - 1] = t_max;
        Ok(Self { points })
    }

    /// Arbitrary strictly increasing sample points.
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidGrid("empty grid".into()));
        }
        if points.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidGrid("non-finite point".into()));
        }
        if points.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidGrid(
                "points are not strictly increasing".into(),
            ));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> f64 {
        self.points[0]
    }

    pub fn last(&self) -> f64 {
        self.points[self.points.len() - 1]
    }

    /// Spacing if the grid is uniform to relative tolerance `1e-9`.
    pub fn uniform_step(&self) -> Option<f64> {
        if self.points.len() < 2 {
            return None;
        }
        let h = (self.last() - self.first()) / (self.points.len() - 1) as f64;
        let uniform = self
            .points
            .windows(2)
            .all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h.abs().max(f64::MIN_POSITIVE));
        uniform.then_some(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_grid() {
        let g = TimeGrid::uniform(0.0, 1.0, 5).unwrap();
        assert_eq!(g.points(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(g.uniform_step(), Some(0.25));
        assert!(TimeGrid::uniform(1.0, 0.0, 5).is_err());
        assert!(TimeGrid::uniform(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn irregular_points() {
        let g = TimeGrid::from_points(vec![0.0, 0.1, 0.5]).unwrap();
        assert_eq!(g.uniform_step(), None);
        assert!(TimeGrid::from_points(vec![0.0, 0.0]).is_err());
    }
}
