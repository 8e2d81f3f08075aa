use crate::chains::Chains;
use crate::error::Result;
use crate::presentation::{
    classify_branches, validate_toupie, BranchClasses, Path, PathComb, Presentation, Quiver,
    ToupieShape,
};
use crate::rewriting::GroebnerData;
use crate::schema::parse_presentation;
use crate::word::Word;

/// A validated toupie presentation with its Gröbner data and chains.
#[derive(Clone, Debug)]
pub struct ToupieAlgebra {
    presentation: Presentation,
    shape: ToupieShape,
    classes: BranchClasses,
    groebner: GroebnerData,
    chains: Chains,
}

impl ToupieAlgebra {
    pub fn new(presentation: Presentation) -> Result<Self> {
        let q = presentation.quiver();
        let shape = validate_toupie(q)?;
        let classes = classify_branches(q, &shape, presentation.relations(), presentation.order())?;
        let groebner = GroebnerData::build(q, &shape, &classes, presentation.relations())?;
        let chains = Chains::build(q, &groebner);
        Ok(Self { presentation, shape, classes, groebner, chains })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::new(parse_presentation(text)?)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    pub fn shape(&self) -> &ToupieShape {
        &self.shape
    }

    pub fn classes(&self) -> &BranchClasses {
        &self.classes
    }

    pub fn groebner(&self) -> &GroebnerData {
        &self.groebner
    }

    pub fn chains(&self) -> &Chains {
        &self.chains
    }

    pub fn dimension(&self) -> usize {
        self.groebner.dimension()
    }

    pub fn normal_form(&self, a: &PathComb) -> PathComb {
        self.groebner.normal_form(self.quiver(), a)
    }

    pub fn mul(&self, a: &PathComb, b: &PathComb) -> PathComb {
        self.groebner.mul(self.quiver(), a, b)
    }

    /// Product of two paths in the algebra; zero if they do not compose.
    pub fn mul_paths(&self, a: &Path, b: &Path) -> PathComb {
        match a.then(b) {
            Some(ab) => self.groebner.normal_form_path(self.quiver(), &ab),
            None => PathComb::zero(),
        }
    }

    pub fn is_nontip(&self, p: &Path) -> bool {
        self.groebner.is_nontip(p)
    }

    /// Betti numbers `|W^(n-1)|` for `n = 0..=degree`.
    pub fn betti(&self, degree: usize) -> Vec<usize> {
        (0..=degree).map(|n| self.chains.count(n as isize - 1)).collect()
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        w.display(self.quiver()).to_string()
    }

    pub fn fmt_path(&self, p: &Path) -> String {
        self.quiver().fmt_path(p)
    }

    pub fn path(&self, names: &[&str]) -> Path {
        self.quiver().path(names).expect("known arrow names")
    }

    /// Builds a word from letters given as `.`-separated arrow names.
    pub fn word(&self, letters: &[&str]) -> Word {
        Word::new(letters.iter().map(|l| self.path(&l.split('.').collect::<Vec<_>>())).collect())
    }
}
