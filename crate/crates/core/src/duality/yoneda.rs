use std::collections::BTreeMap;

use num_traits::Zero;

use crate::ainf::ext_table;
use crate::algebra::ToupieAlgebra;
use crate::error::{Error, Result};
use crate::morse::WordComb;
use crate::presentation::{Path, PathComb, Presentation, Quiver};
use crate::rewriting::{Echelon, Matrix};
use crate::scalar::Scalar;
use crate::word::Word;

use super::{graded_dimensions, hypotheses_check, AlgebraPresentation, Provenance};

const DUAL: char = '∨';

/// `a -> a∨` and `a∨ -> a`.
pub fn dual_name(name: &str) -> String {
    match name.strip_suffix(DUAL) {
        Some(base) => base.to_string(),
        None => format!("{name}{DUAL}"),
    }
}

/// The path of `Q^op` dual to `p`: arrows reversed and renamed.
pub fn dual_path(q: &Quiver, op: &Quiver, p: &Path) -> Path {
    let names: Vec<String> = q.path_names(p).iter().rev().map(|n| dual_name(n)).collect();
    op.path(&names).expect("dual path exists in the opposite quiver")
}

/// `A!` as `kQ^op / ker(m_2 : E^1 x E^1 -> E^2)`, refusing when the
/// hypotheses fail.
pub fn yoneda_presentation(alg: &ToupieAlgebra) -> Result<AlgebraPresentation> {
    let h = hypotheses_check(alg);
    if !h.holds() {
        return Err(Error::Hypotheses(h.reasons));
    }
    yoneda_unchecked(alg)
}

/// The quadratic part of the Ext algebra, verified to generate all of it
/// with the right graded dimensions.
pub fn yoneda_unchecked(alg: &ToupieAlgebra) -> Result<AlgebraPresentation> {
    let q = alg.quiver();
    let op = q.opposite(dual_name);
    let m = ext_table(alg, 2);
    let letter = |p: &Path| Word::letter(p.clone());

    let quadratic: Vec<Path> = q.all_paths()?.into_iter().filter(|p| p.len() == 2).collect();
    let products: Vec<WordComb> = quadratic
        .iter()
        .map(|p| {
            let (a, b) = q.split_at(p, 1);
            m.get(&[letter(&a), letter(&b)])
        })
        .collect();

    // Vanishing products give monomial relations; the rest go through a kernel.
    let mut relations: Vec<PathComb> = Vec::new();
    let mut live: Vec<usize> = Vec::new();
    for (i, v) in products.iter().enumerate() {
        if v.is_zero() {
            relations.push(PathComb::basis(dual_path(q, &op, &quadratic[i])));
        } else {
            live.push(i);
        }
    }
    let targets: Vec<&Word> = {
        let mut t: Vec<&Word> = live.iter().flat_map(|&i| products[i].support()).collect();
        t.sort();
        t.dedup();
        t
    };
    let rows: Vec<Vec<Scalar>> =
        live.iter().map(|&i| targets.iter().map(|w| products[i].coeff(w)).collect()).collect();
    // Kernel of the left action on row vectors: kernel of the transpose.
    let transpose = Matrix::from_rows(
        (0..targets.len()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect(),
        live.len(),
    );
    let kernel: Vec<PathComb> = transpose
        .kernel()
        .into_iter()
        .map(|v| {
            live.iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&i, c)| (dual_path(q, &op, &quadratic[i]), c))
                .collect()
        })
        .collect();
    let mut span = Echelon::new();
    for v in &kernel {
        span.insert(v);
    }
    relations.extend(span.canonical_basis());

    let order = alg.presentation().order().iter().map(|n| dual_name(n)).collect();
    let presentation = Presentation::new(op, relations, order)?;
    check_generation(alg, &presentation, &m)?;
    Ok(AlgebraPresentation { presentation, provenance: Provenance::Yoneda })
}

/// `(kQ^op/R)_d` must match `Ext^d`, and the iterated products of degree-one
/// classes must span `Ext^d`; otherwise the Ext algebra is not quadratic.
fn check_generation(alg: &ToupieAlgebra, shriek: &Presentation, m: &crate::ainf::AlgebraTable) -> Result<()> {
    let dims = graded_dimensions(shriek)?;
    let chains = alg.chains();
    let top = dims.len().max(chains.max_index() as usize + 2);
    for d in 2..top {
        let have = dims.get(d).copied().unwrap_or(0);
        let want = chains.count(d as isize - 1);
        if have != want {
            return Err(Error::NotQuadratic(format!(
                "quadratic dual has dimension {have} in degree {d}, Ext has {want}"
            )));
        }
    }

    let q = alg.quiver();
    let mut by_len: BTreeMap<usize, Echelon<Word>> = BTreeMap::new();
    for p in q.all_paths()?.into_iter().filter(|p| p.len() >= 2) {
        let letters: Vec<Path> = (0..p.len()).map(|k| q.subpath(&p, k, k + 1)).collect();
        let mut v = WordComb::basis(Word::letter(letters[0].clone()));
        for a in &letters[1..] {
            let next = Word::letter(a.clone());
            v = v.map_linear(|c| m.get(&[c.clone(), next.clone()]));
            if v.is_zero() {
                break;
            }
        }
        by_len.entry(p.len()).or_default().insert(&v);
    }
    for d in 2..top {
        let rank = by_len.get(&d).map_or(0, Echelon::rank);
        let want = chains.count(d as isize - 1);
        if rank != want {
            return Err(Error::NotQuadratic(format!(
                "products of degree-one classes span {rank} of {want} dimensions of Ext^{d}"
            )));
        }
    }
    Ok(())
}

/// `A!!`, computed by dualizing twice.
pub fn double_dual(alg: &ToupieAlgebra) -> Result<AlgebraPresentation> {
    let shriek = yoneda_presentation(alg)?;
    let inner = ToupieAlgebra::new(shriek.presentation)?;
    let mut out = yoneda_presentation(&inner)?;
    out.provenance = Provenance::DoubleDual;
    Ok(out)
}
