use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::config::Budget;
use crate::field::{Field, Scalar};

/// Deterministic search schedule: the basis vectors, then integer points by
/// increasing height `1..=H` (capped), then seeded random points.
pub struct SearchPoints {
    field: Field,
    n: usize,
    stage: Stage,
    height_cap: u32,
    points_left: u64,
    trials_left: u64,
    rng: ChaCha8Rng,
    pub visited_points: u64,
    pub visited_trials: u64,
}

enum Stage {
    Basis(usize),
    Height { h: u32, idx: u64, end: u64 },
    Random,
}

// 0, 1, -1, 2, -2, ...
fn digit_value(d: u64) -> i64 {
    if d % 2 == 1 {
        d.div_ceil(2) as i64
    } else {
        -((d / 2) as i64)
    }
}

impl SearchPoints {
    pub fn new(field: Field, n: usize, budget: &Budget) -> SearchPoints {
        SearchPoints {
            field,
            n,
            stage: Stage::Basis(0),
            height_cap: budget.search_height,
            points_left: budget.search_points,
            trials_left: budget.random_trials,
            rng: crate::rng(budget.seed),
            visited_points: 0,
            visited_trials: 0,
        }
    }

    fn height_stage(&self, h: u32) -> Stage {
        let base = 2 * h as u64 + 1;
        let end = base.checked_pow(self.n as u32).unwrap_or(u64::MAX);
        Stage::Height { h, idx: 0, end }
    }
}

impl Iterator for SearchPoints {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        loop {
            match &mut self.stage {
                Stage::Basis(i) => {
                    if *i < self.n {
                        let v = crate::linalg::unit(self.field, self.n, *i);
                        *i += 1;
                        self.visited_points += 1;
                        return Some(v);
                    }
                    self.stage = if self.height_cap >= 1 && self.n > 0 { self.height_stage(1) } else { Stage::Random };
                }
                Stage::Height { h, idx, end } => {
                    if self.points_left == 0 {
                        self.stage = Stage::Random;
                        continue;
                    }
                    if *idx >= *end {
                        let next = *h + 1;
                        self.stage = if next <= self.height_cap { self.height_stage(next) } else { Stage::Random };
                        continue;
                    }
                    let base = 2 * *h as u64 + 1;
                    let mut k = *idx;
                    *idx += 1;
                    let vals: Vec<i64> = (0..self.n)
                        .map(|_| {
                            let d = k % base;
                            k /= base;
                            digit_value(d)
                        })
                        .collect();
                    // exact height h only; skip basis vectors already visited
                    let max = vals.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
                    let nonzero = vals.iter().filter(|&&v| v != 0).count();
                    if max != *h as u64 || (nonzero == 1 && vals.contains(&1)) {
                        continue;
                    }
                    self.points_left -= 1;
                    self.visited_points += 1;
                    return Some(vals.into_iter().map(|v| self.field.from_i64(v)).collect());
                }
                Stage::Random => {
                    if self.trials_left == 0 {
                        return None;
                    }
                    self.trials_left -= 1;
                    self.visited_trials += 1;
                    let v = (0..self.n)
                        .map(|_| match self.field {
                            Field::Q => self.field.from_i64(self.rng.gen::<i64>()),
                            Field::Fp { p } => self.field.element(self.rng.gen_range(0..p)),
                        })
                        .collect();
                    return Some(v);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_order() {
        let b = Budget { search_height: 1, random_trials: 2, ..Budget::default() };
        let pts: Vec<Vec<Scalar>> = SearchPoints::new(Field::Q, 2, &b).collect();
        // 2 basis vectors + (9 - 1 - 2) height-1 points + 2 random
        assert_eq!(pts.len(), 2 + 6 + 2);
        let f = Field::Q;
        assert_eq!(pts[0], vec![f.one(), f.zero()]);
        assert_eq!(pts[2], vec![f.from_i64(-1), f.zero()]);
        let again: Vec<Vec<Scalar>> = SearchPoints::new(Field::Q, 2, &b).collect();
        assert_eq!(pts, again);
    }
}
