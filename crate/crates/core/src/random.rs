//! Seeded random toupie presentations for property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::ToupieAlgebra;
use crate::presentation::{PathComb, Presentation, Quiver};
use crate::rewriting::Matrix;
use crate::scalar::{int, Scalar};

#[derive(Clone, Copy, Debug)]
pub struct RandomConfig {
    pub max_branches: usize,
    pub max_len: usize,
    /// Prefer shapes that satisfy the double-dual hypotheses: quadratic
    /// monomials and mostly quadratic branches in binomial relations.
    pub biased: bool,
}

impl Default for RandomConfig {
    fn default() -> Self {
        Self { max_branches: 5, max_len: 4, biased: false }
    }
}

const LETTERS: [&str; 5] = ["a", "b", "c", "d", "e"];

fn coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    let mut c = 0;
    while c == 0 {
        c = rng.random_range(-3..=3);
    }
    int(c)
}

/// One random presentation; always a valid toupie algebra.
pub fn random_presentation(rng: &mut ChaCha8Rng, cfg: RandomConfig) -> Presentation {
    loop {
        if let Some(p) = attempt(rng, cfg) {
            if ToupieAlgebra::new(p.clone()).is_ok() {
                return p;
            }
        }
    }
}

fn attempt(rng: &mut ChaCha8Rng, cfg: RandomConfig) -> Option<Presentation> {
    let k = rng.random_range(1..=cfg.max_branches.min(LETTERS.len()));
    let long_len = |rng: &mut ChaCha8Rng| {
        if cfg.biased && rng.random_bool(0.7) { 2 } else { rng.random_range(1..=cfg.max_len) }
    };
    let lens: Vec<usize> = (0..k).map(|_| long_len(rng)).collect();

    let mut vertices = vec!["0".to_string(), "w".to_string()];
    let mut arrows = Vec::new();
    for (b, &len) in lens.iter().enumerate() {
        for i in 1..=len {
            let src = if i == 1 { "0".to_string() } else { format!("{}{}", LETTERS[b].to_uppercase(), i - 1) };
            let dst = if i == len { "w".to_string() } else { format!("{}{}", LETTERS[b].to_uppercase(), i) };
            if i < len {
                vertices.push(dst.clone());
            }
            arrows.push((format!("{}{}", LETTERS[b], i), src, dst));
        }
    }
    let q = Quiver::new(&vertices, &arrows).ok()?;
    let branch = |b: usize, from: usize, to: usize| {
        let names: Vec<String> = (from..to).map(|i| format!("{}{}", LETTERS[b], i + 1)).collect();
        q.path(&names).expect("branch subpath")
    };

    let mut relations = Vec::new();
    let mut binomial = Vec::new();
    for (b, &len) in lens.iter().enumerate() {
        if len < 2 {
            continue;
        }
        match rng.random_range(0..3) {
            0 => {
                let count = rng.random_range(1..=2);
                for _ in 0..count {
                    let width = if cfg.biased { 2 } else { rng.random_range(2..=len) };
                    let start = rng.random_range(0..=len - width);
                    relations.push(PathComb::basis(branch(b, start, start + width)));
                }
            }
            1 => binomial.push(b),
            _ => {}
        }
    }
    if binomial.len() >= 2 {
        let r = rng.random_range(1..binomial.len());
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for _ in 0..r {
            let row: Vec<Scalar> = binomial
                .iter()
                .map(|_| if rng.random_bool(0.6) { coefficient(rng) } else { int(0) })
                .collect();
            rows.push(row);
        }
        if Matrix::from_rows(rows.clone(), binomial.len()).rank() < r {
            return None;
        }
        for row in rows {
            if row.iter().filter(|c| **c != int(0)).count() < 2 {
                return None;
            }
            let rel: PathComb = binomial
                .iter()
                .zip(row)
                .filter(|(_, c)| *c != int(0))
                .map(|(&b, c)| (branch(b, 0, lens[b]), c))
                .collect();
            relations.push(rel);
        }
    }

    let mut order: Vec<String> = (0..k).map(|b| format!("{}1", LETTERS[b])).collect();
    order.shuffle(rng);
    Presentation::new(q, relations, order).ok()
}

/// `count` algebras from one seed.
pub fn random_batch(seed: u64, count: usize, cfg: RandomConfig) -> Vec<ToupieAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| ToupieAlgebra::new(random_presentation(&mut rng, cfg)).expect("validated"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::presentation_to_json;

    #[test]
    fn deterministic() {
        let a: Vec<String> =
            random_batch(7, 5, RandomConfig::default()).iter().map(|x| presentation_to_json(x.presentation())).collect();
        let b: Vec<String> =
            random_batch(7, 5, RandomConfig::default()).iter().map(|x| presentation_to_json(x.presentation())).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn within_bounds() {
        for alg in random_batch(11, 30, RandomConfig::default()) {
            let shape = alg.shape();
            assert!(shape.branches.len() <= 5);
            assert!(shape.branches.iter().all(|b| b.len() <= 4));
        }
    }

    #[test]
    fn bias_reaches_hypotheses() {
        let cfg = RandomConfig { biased: true, ..RandomConfig::default() };
        let passing = random_batch(3, 30, cfg)
            .iter()
            .filter(|a| crate::duality::hypotheses_check(a).holds())
            .count();
        assert!(passing >= 10, "{passing}");
    }
}
