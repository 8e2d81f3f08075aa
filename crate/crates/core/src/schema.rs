//! JSON interchange format for presentations.
//!
//! ```json
//! {"vertices": ["0", "w"], "arrows": [{"name": "a", "src": "0", "dst": "w"}],
//!  "relations": [[{"coeff": "1", "path": ["a"]}]], "order": ["a"]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{PathComb, Presentation, Quiver};
use crate::scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub name: String,
    pub src: String,
    pub dst: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub relations: Vec<Vec<TermJson>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub order: Vec<String>,
}

impl PresentationJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn to_presentation(&self) -> Result<Presentation> {
        let arrows: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|a| (a.name.as_str(), a.src.as_str(), a.dst.as_str())).collect();
        let quiver = Quiver::new(&self.vertices, &arrows)?;
        let mut relations = Vec::with_capacity(self.relations.len());
        for (index, terms) in self.relations.iter().enumerate() {
            let mut rel = PathComb::zero();
            for t in terms {
                if t.path.is_empty() {
                    return Err(Error::Relation { index, reason: "empty path in relation".into() });
                }
                rel.add_term(quiver.path(&t.path)?, scalar::parse(&t.coeff)?);
            }
            relations.push(rel);
        }
        Presentation::new(quiver, relations, self.order.clone())
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        let q = p.quiver();
        Self {
            vertices: q.vertex_names().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    src: q.vertex_name(a.source).to_string(),
                    dst: q.vertex_name(a.target).to_string(),
                })
                .collect(),
            relations: p
                .relations()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(path, c)| TermJson { coeff: scalar::format(c), path: q.path_names(path) })
                        .collect()
                })
                .collect(),
            order: p.order().to_vec(),
        }
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    PresentationJson::parse(text)?.to_presentation()
}

pub fn presentation_to_json(p: &Presentation) -> String {
    serde_json::to_string_pretty(&PresentationJson::from_presentation(p)).expect("serializable")
}
