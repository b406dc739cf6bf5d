//! Provenance records and their line-oriented text form.
//!
//! ```text
//! starpack-provenance v1
//! kind star|semistar
//! input <vertices> <fingerprint>
//! output <vertices> <fingerprint>
//! star <center> <leaf> <leaf> <leaf>
//! role <vertex> kept <input vertex>
//! role <vertex> star-new <center> <position>
//! role <vertex> subdivision <center> <leaf>
//! ...kind-specific lines...
//! end
//! ```
//!
//! Star records add `image`, `corner`, `pentagon`, `hexagon` and `cross`
//! lines; semi-star records add `subdivide`, `chord` and `choice` lines.
//! Vertex numbers are 1-based and lines appear in a fixed order, so the same
//! record always serializes to the same bytes.

use std::fmt::Write as _;

use thiserror::Error;

use super::chords::ChordHexagon;
use crate::packing::{Star, StarPacking};

pub const PROVENANCE_HEADER: &str = "starpack-provenance v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Kept { input: usize },
    StarNew { center: usize, position: usize },
    Subdivision { center: usize, leaf: usize },
}

/// The new hexagon replacing one star.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarImage {
    pub center: usize,
    pub leaves: [usize; 3],
    /// Output vertices in hexagon order; `ring[2i]` attaches to `leaves[i]`.
    pub ring: [usize; 6],
    /// The cross-edge partner of `ring[2i + 1]`.
    pub partners: [usize; 3],
    /// Input face at corner `i` of the center, which `ring[2i + 1]` enters.
    pub corner_faces: [Vec<usize>; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarTransformProvenance {
    pub input_vertices: usize,
    pub input_fingerprint: String,
    pub output_vertices: usize,
    pub output_fingerprint: String,
    pub packing: StarPacking,
    pub stars: Vec<StarImage>,
    /// Output boundaries of the input pentagons.
    pub pentagons: Vec<Vec<usize>>,
    /// Output boundaries of the input hexagons without centers.
    pub zero_center_hexagons: Vec<Vec<usize>>,
    pub cross_edges: Vec<(usize, usize)>,
    pub roles: Vec<VertexRole>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiStarProvenance {
    pub input_vertices: usize,
    pub input_fingerprint: String,
    pub output_vertices: usize,
    pub output_fingerprint: String,
    pub packing: StarPacking,
    /// `(center, leaf, subdivision vertex)`.
    pub subdivisions: Vec<(usize, usize, usize)>,
    pub chords: Vec<(usize, usize)>,
    pub hexagons: Vec<ChordHexagon>,
    pub roles: Vec<VertexRole>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Star(StarTransformProvenance),
    SemiStar(SemiStarProvenance),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ProvenanceParseError {
    #[error("missing header line `{PROVENANCE_HEADER}`")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("record ends without `end`")]
    Unterminated,
}

fn list(out: &mut String, tag: &str, vs: impl IntoIterator<Item = usize>) {
    out.push_str(tag);
    for v in vs {
        write!(out, " {}", v + 1).unwrap();
    }
    out.push('\n');
}

#[allow(clippy::too_many_arguments)]
fn common(out: &mut String, kind: &str, n_in: usize, fp_in: &str, n_out: usize, fp_out: &str, p: &StarPacking, roles: &[VertexRole]) {
    writeln!(out, "{PROVENANCE_HEADER}").unwrap();
    writeln!(out, "kind {kind}").unwrap();
    writeln!(out, "input {n_in} {fp_in}").unwrap();
    writeln!(out, "output {n_out} {fp_out}").unwrap();
    for s in &p.stars {
        list(out, "star", s.vertices());
    }
    for (v, role) in roles.iter().enumerate() {
        match *role {
            VertexRole::Kept { input } => writeln!(out, "role {} kept {}", v + 1, input + 1),
            VertexRole::StarNew { center, position } => {
                writeln!(out, "role {} star-new {} {}", v + 1, center + 1, position + 1)
            }
            VertexRole::Subdivision { center, leaf } => {
                writeln!(out, "role {} subdivision {} {}", v + 1, center + 1, leaf + 1)
            }
        }
        .unwrap();
    }
}

impl Provenance {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Provenance::Star(p) => {
                common(&mut out, "star", p.input_vertices, &p.input_fingerprint, p.output_vertices, &p.output_fingerprint, &p.packing, &p.roles);
                for img in &p.stars {
                    list(&mut out, "image", [img.center].into_iter().chain(img.ring).chain(img.partners));
                    for (i, face) in img.corner_faces.iter().enumerate() {
                        write!(out, "corner {} {}", img.center + 1, i + 1).unwrap();
                        list(&mut out, "", face.iter().copied());
                    }
                }
                for f in &p.pentagons {
                    list(&mut out, "pentagon", f.iter().copied());
                }
                for f in &p.zero_center_hexagons {
                    list(&mut out, "hexagon", f.iter().copied());
                }
                for &(a, b) in &p.cross_edges {
                    list(&mut out, "cross", [a, b]);
                }
            }
            Provenance::SemiStar(p) => {
                common(&mut out, "semistar", p.input_vertices, &p.input_fingerprint, p.output_vertices, &p.output_fingerprint, &p.packing, &p.roles);
                for &(c, l, s) in &p.subdivisions {
                    list(&mut out, "subdivide", [c, l, s]);
                }
                for &(a, b) in &p.chords {
                    list(&mut out, "chord", [a, b]);
                }
                for h in &p.hexagons {
                    write!(out, "choice {}", h.choice as u8).unwrap();
                    list(&mut out, "", h.boundary.iter().copied());
                    list(&mut out, "edges", h.star_edges.iter().flat_map(|&(c, l)| [c, l]));
                }
            }
        }
        out.push_str("end\n");
        out
    }

    pub fn parse(text: &str) -> Result<Provenance, ProvenanceParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, l)) if l == PROVENANCE_HEADER => {}
            _ => return Err(ProvenanceParseError::MissingHeader),
        }
        let mut r = Reader::default();
        let mut ended = false;
        for (line, l) in lines {
            if ended {
                return Err(malformed(line, "content after `end`"));
            }
            if l == "end" {
                ended = true;
                continue;
            }
            r.line(line, l)?;
        }
        if !ended {
            return Err(ProvenanceParseError::Unterminated);
        }
        r.finish()
    }

    pub fn output_fingerprint(&self) -> &str {
        match self {
            Provenance::Star(p) => &p.output_fingerprint,
            Provenance::SemiStar(p) => &p.output_fingerprint,
        }
    }
}

fn malformed(line: usize, message: impl Into<String>) -> ProvenanceParseError {
    ProvenanceParseError::Malformed {
        line,
        message: message.into(),
    }
}

#[derive(Default)]
struct Reader {
    kind: Option<String>,
    input: Option<(usize, String)>,
    output: Option<(usize, String)>,
    stars: Vec<Star>,
    roles: Vec<VertexRole>,
    images: Vec<StarImage>,
    pentagons: Vec<Vec<usize>>,
    hexagons: Vec<Vec<usize>>,
    cross: Vec<(usize, usize)>,
    subdivisions: Vec<(usize, usize, usize)>,
    chords: Vec<(usize, usize)>,
    choices: Vec<ChordHexagon>,
}

impl Reader {
    fn line(&mut self, line: usize, l: &str) -> Result<(), ProvenanceParseError> {
        let mut words = l.split_whitespace();
        let tag = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        let nums = |from: usize| -> Result<Vec<usize>, ProvenanceParseError> {
            rest.get(from..)
                .unwrap_or(&[])
                .iter()
                .map(|w| match w.parse::<usize>() {
                    Ok(v) if v > 0 => Ok(v - 1),
                    _ => Err(malformed(line, format!("expected a positive integer, got `{w}`"))),
                })
                .collect()
        };
        let exact = |from: usize, k: usize| -> Result<Vec<usize>, ProvenanceParseError> {
            let v = nums(from)?;
            if v.len() != k {
                return Err(malformed(line, format!("`{tag}` takes {k} vertex numbers")));
            }
            Ok(v)
        };
        match tag {
            "kind" => match rest.as_slice() {
                [k @ ("star" | "semistar")] => self.kind = Some(k.to_string()),
                _ => return Err(malformed(line, "kind must be `star` or `semistar`")),
            },
            "input" | "output" => {
                let [count, fp] = rest.as_slice() else {
                    return Err(malformed(line, format!("`{tag}` takes a vertex count and a fingerprint")));
                };
                let count = count
                    .parse()
                    .map_err(|_| malformed(line, "bad vertex count"))?;
                let slot = if tag == "input" { &mut self.input } else { &mut self.output };
                *slot = Some((count, fp.to_string()));
            }
            "star" => {
                let v = exact(0, 4)?;
                self.stars.push(Star {
                    center: v[0],
                    leaves: [v[1], v[2], v[3]],
                });
            }
            "role" => {
                let (Some(v), Some(kind)) = (rest.first(), rest.get(1)) else {
                    return Err(malformed(line, "`role` takes a vertex and a role"));
                };
                let v: usize = v.parse().map_err(|_| malformed(line, "bad vertex"))?;
                if v != self.roles.len() + 1 {
                    return Err(malformed(line, "roles must be listed in vertex order"));
                }
                let role = match *kind {
                    "kept" => {
                        let a = exact(2, 1)?;
                        VertexRole::Kept { input: a[0] }
                    }
                    "star-new" => {
                        let a = exact(2, 2)?;
                        VertexRole::StarNew {
                            center: a[0],
                            position: a[1],
                        }
                    }
                    "subdivision" => {
                        let a = exact(2, 2)?;
                        VertexRole::Subdivision {
                            center: a[0],
                            leaf: a[1],
                        }
                    }
                    other => return Err(malformed(line, format!("unknown role `{other}`"))),
                };
                self.roles.push(role);
            }
            "image" => {
                let v = exact(0, 10)?;
                self.images.push(StarImage {
                    center: v[0],
                    leaves: [0; 3],
                    ring: std::array::from_fn(|j| v[1 + j]),
                    partners: [v[7], v[8], v[9]],
                    corner_faces: Default::default(),
                });
            }
            "corner" => {
                let v = nums(0)?;
                let img = self
                    .images
                    .last_mut()
                    .filter(|img| v.first() == Some(&img.center))
                    .ok_or_else(|| malformed(line, "`corner` must follow the `image` of its center"))?;
                match v.get(1) {
                    Some(&i) if i < 3 && v.len() > 2 => img.corner_faces[i] = v[2..].to_vec(),
                    _ => return Err(malformed(line, "`corner` takes a center, a corner 1..3 and a face")),
                }
            }
            "pentagon" => self.pentagons.push(nums(0)?),
            "hexagon" => self.hexagons.push(nums(0)?),
            "cross" => {
                let v = exact(0, 2)?;
                self.cross.push((v[0], v[1]));
            }
            "subdivide" => {
                let v = exact(0, 3)?;
                self.subdivisions.push((v[0], v[1], v[2]));
            }
            "chord" => {
                let v = exact(0, 2)?;
                self.chords.push((v[0], v[1]));
            }
            "choice" => {
                let choice = match rest.first() {
                    Some(&"0") => false,
                    Some(&"1") => true,
                    _ => return Err(malformed(line, "choice must be 0 or 1")),
                };
                self.choices.push(ChordHexagon {
                    boundary: nums(1)?,
                    star_edges: [(0, 0); 4],
                    choice,
                });
            }
            "edges" => {
                let v = exact(0, 8)?;
                let h = self
                    .choices
                    .last_mut()
                    .ok_or_else(|| malformed(line, "`edges` must follow a `choice` line"))?;
                h.star_edges = std::array::from_fn(|k| (v[2 * k], v[2 * k + 1]));
            }
            other => return Err(malformed(line, format!("unknown record `{other}`"))),
        }
        Ok(())
    }

    fn finish(self) -> Result<Provenance, ProvenanceParseError> {
        let missing = |what: &str| malformed(0, format!("missing `{what}` line"));
        let (input_vertices, input_fingerprint) = self.input.ok_or_else(|| missing("input"))?;
        let (output_vertices, output_fingerprint) = self.output.ok_or_else(|| missing("output"))?;
        let packing = StarPacking::new(self.stars);
        match self.kind.as_deref() {
            Some("star") => {
                let mut stars = self.images;
                for img in &mut stars {
                    let st = packing
                        .stars
                        .iter()
                        .find(|s| s.center == img.center)
                        .ok_or_else(|| malformed(0, format!("image of unknown center {}", img.center + 1)))?;
                    img.leaves = st.leaves;
                }
                Ok(Provenance::Star(StarTransformProvenance {
                    input_vertices,
                    input_fingerprint,
                    output_vertices,
                    output_fingerprint,
                    packing,
                    stars,
                    pentagons: self.pentagons,
                    zero_center_hexagons: self.hexagons,
                    cross_edges: self.cross,
                    roles: self.roles,
                }))
            }
            Some(_) => Ok(Provenance::SemiStar(SemiStarProvenance {
                input_vertices,
                input_fingerprint,
                output_vertices,
                output_fingerprint,
                packing,
                subdivisions: self.subdivisions,
                chords: self.chords,
                hexagons: self.choices,
                roles: self.roles,
            })),
            None => Err(missing("kind")),
        }
    }
}
