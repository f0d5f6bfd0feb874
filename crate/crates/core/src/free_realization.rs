//! Realize a primitive 0-1 matrix as the stationary transition block of left
//! multiplication by an element of the group ring of the free group `F₂`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::group_core::{FreeGroup2, Letter, Word};
use crate::growth::{grow, AdmissibleSet, BallSequence};
use crate::tolerances::DEFAULT_ELEMENT_CAP;

/// Words and support derived from a primitive 0-1 matrix.
#[derive(Clone, Debug)]
pub struct RealizationSpec {
    pub matrix: Vec<Vec<u8>>,
    /// `v_i = g^{-(i-2)} h^{i-1}` for `i = 1..=k`.
    pub anchors: Vec<Word>,
    /// `w_{ij} = v_j g v_i⁻¹` where `B_{ij} = 1`, as `(i, j, word)`.
    pub transitions: Vec<(usize, usize, Word)>,
    /// `1`, every transition word and its inverse.
    pub support: Vec<Word>,
}

/// Smallest `e ≤ (k-1)² + 1` with `B^e > 0`.
pub fn primitivity_exponent(matrix: &[Vec<u8>]) -> Option<usize> {
    let k = matrix.len();
    let base: Vec<Vec<bool>> = matrix.iter().map(|r| r.iter().map(|&x| x != 0).collect()).collect();
    let mut cur = base.clone();
    for e in 1..=(k - 1) * (k - 1) + 1 {
        if cur.iter().all(|r| r.iter().all(|&x| x)) {
            return Some(e);
        }
        cur = (0..k)
            .map(|i| (0..k).map(|j| (0..k).any(|l| cur[i][l] && base[l][j])).collect())
            .collect();
    }
    None
}

fn anchor(i: usize) -> Word {
    Word::power(Letter::G, 2 - i as i64).mul(&Word::power(Letter::H, i as i64 - 1))
}

impl RealizationSpec {
    pub fn build(matrix: Vec<Vec<u8>>) -> Result<Self> {
        let k = matrix.len();
        if k < 2 {
            return invalid("matrix must be at least 2×2");
        }
        if matrix.iter().any(|r| r.len() != k || r.iter().any(|&x| x > 1)) {
            return invalid("matrix must be square with 0/1 entries");
        }
        if primitivity_exponent(&matrix).is_none() {
            return invalid("matrix is not primitive");
        }
        let anchors: Vec<Word> = (1..=k).map(anchor).collect();
        let g = Word::power(Letter::G, 1);
        let mut transitions = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if matrix[i][j] == 1 {
                    transitions.push((i, j, anchors[j].mul(&g).mul(&anchors[i].inv())));
                }
            }
        }
        let mut support = vec![Word::identity()];
        for (_, _, w) in &transitions {
            support.push(w.clone());
            support.push(w.inv());
        }
        let distinct: BTreeSet<&Word> = support.iter().collect();
        if distinct.len() != support.len() {
            return invalid("transition words and inverses are not pairwise distinct");
        }
        for (_, _, w) in &transitions {
            if w.degree() != 1 || w.inv().degree() != -1 {
                return invalid(format!("transition word {w} does not have degree one"));
            }
        }
        Ok(RealizationSpec { matrix, anchors, transitions, support })
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// `w ∈ supp f ⇔ w⁻¹ ∈ supp f`.
    pub fn is_symmetric(&self) -> bool {
        let set: BTreeSet<&Word> = self.support.iter().collect();
        self.support.iter().all(|w| set.contains(&w.inv()))
    }

    /// Coefficients are 0 or 1 because the support words are distinct.
    pub fn coefficients_are_binary(&self) -> bool {
        self.support.iter().collect::<BTreeSet<_>>().len() == self.support.len()
    }

    /// `(v_1 g^{n-1}, …, v_k g^{n-1})`.
    pub fn gamma_b(&self, n: usize) -> Vec<Word> {
        let tail = Word::power(Letter::G, n as i64 - 1);
        self.anchors.iter().map(|v| v.mul(&tail)).collect()
    }

    pub fn admissible_set(&self) -> Result<AdmissibleSet<Word>> {
        AdmissibleSet::new(&FreeGroup2, self.support.clone())
    }

    pub fn ball(&self, depth: usize) -> Result<BallSequence<Word>> {
        grow(&FreeGroup2, &self.admissible_set()?, depth, DEFAULT_ELEMENT_CAP)
    }

    /// Compressed left multiplication by `f` from `Γ^B_n` to `Γ^B_{n+1}`:
    /// entry `(i, j)` is the coefficient of `v_j g^n` in `f · v_i g^{n-1}`.
    pub fn transition_matrix(&self, n: usize) -> Vec<Vec<u8>> {
        let src = self.gamma_b(n);
        let dst = self.gamma_b(n + 1);
        src.iter()
            .map(|x| {
                dst.iter()
                    .map(|y| self.support.iter().filter(|s| &s.mul(x) == y).count() as u8)
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationReport {
    pub n: usize,
    pub in_level: bool,
    pub transition: Vec<Vec<u8>>,
    pub transition_ok: bool,
    pub isolated: bool,
    /// `{x ∈ S^n : deg x = n}` equals the set of `n`-fold transition products.
    pub top_degree_ok: bool,
}

/// Whether no `s·γ` with `γ ∈ Γ_n \ Γ^B_n` lands in `Γ^B_{n+1}`.
pub fn check_isolation(spec: &RealizationSpec, ball: &BallSequence<Word>, n: usize) -> bool {
    let own: BTreeSet<Word> = spec.gamma_b(n).into_iter().collect();
    let targets: BTreeSet<Word> = spec.gamma_b(n + 1).into_iter().collect();
    ball.sphere(n)
        .iter()
        .filter(|x| !own.contains(*x))
        .all(|x| spec.support.iter().all(|s| !targets.contains(&s.mul(x))))
}

fn top_degree_check(spec: &RealizationSpec, ball: &BallSequence<Word>, n: usize) -> bool {
    let from_ball: BTreeSet<Word> = ball.ball(n).filter(|x| x.degree() == n as i64).cloned().collect();
    let mut products: BTreeSet<Word> = std::iter::once(Word::identity()).collect();
    for _ in 0..n {
        products = products
            .iter()
            .flat_map(|x| spec.transitions.iter().map(move |(_, _, w)| w.mul(x)))
            .collect();
    }
    from_ball == products && from_ball.iter().all(|x| ball.level_of(x) == Some(n))
}

/// Levels, transition block, isolation and top-degree structure for `1..=depth`.
pub fn verify(spec: &RealizationSpec, depth: usize) -> Result<Vec<RealizationReport>> {
    let ball = spec.ball(depth + 1)?;
    Ok((1..=depth)
        .map(|n| {
            let in_level = spec.gamma_b(n).iter().all(|x| ball.level_of(x) == Some(n));
            let transition = spec.transition_matrix(n);
            RealizationReport {
                n,
                in_level,
                transition_ok: transition == spec.matrix,
                transition,
                isolated: check_isolation(spec, &ball, n),
                top_degree_ok: top_degree_check(spec, &ball, n),
            }
        })
        .collect())
}

/// Smallest `J ≤ max_j` with `g^±1, h^±1 ∈ S^J`.
pub fn generation_depth(spec: &RealizationSpec, max_j: usize) -> Result<Option<usize>> {
    let ball = spec.ball(max_j)?;
    let gens = [Letter::G, Letter::GInv, Letter::H, Letter::HInv].map(|l| Word::power(l, 1));
    Ok(gens.iter().map(|x| ball.level_of(x)).try_fold(0, |acc, l| l.map(|l| acc.max(l))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ones_words() {
        let spec = RealizationSpec::build(vec![vec![1, 1], vec![1, 1]]).unwrap();
        let words: Vec<String> = spec.transitions.iter().map(|(_, _, w)| w.to_string()).collect();
        assert_eq!(words, vec!["g", "h", "ggH", "hgH"]);
        assert!(spec.is_symmetric());
        assert!(spec.coefficients_are_binary());
        assert_eq!(spec.gamma_b(1).iter().map(Word::to_string).collect::<Vec<_>>(), vec!["g", "h"]);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(RealizationSpec::build(vec![vec![1]]).is_err());
        assert!(RealizationSpec::build(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(RealizationSpec::build(vec![vec![1, 2], vec![1, 1]]).is_err());
    }

    #[test]
    fn primitivity() {
        assert_eq!(primitivity_exponent(&[vec![1, 1], vec![1, 1]]), Some(1));
        assert_eq!(primitivity_exponent(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 1]]), Some(4));
        assert_eq!(primitivity_exponent(&[vec![0, 1], vec![1, 0]]), None);
    }

    #[test]
    fn small_depth_all_ones() {
        let spec = RealizationSpec::build(vec![vec![1, 1], vec![1, 1]]).unwrap();
        for r in verify(&spec, 3).unwrap() {
            assert!(r.in_level && r.transition_ok && r.isolated && r.top_degree_ok, "{r:?}");
        }
        assert_eq!(generation_depth(&spec, 3).unwrap(), Some(1));
    }
}
