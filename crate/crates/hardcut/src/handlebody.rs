//! The thickened-expander handlebody: a 3-regular graph whose vertices are
//! balls of radius `1/n` glued along hole discs, together with the case
//! analysis that prices any volume-balanced cut of it.
//!
//! Severing one glued hole is priced at the flat disc spanning the hole
//! cap's boundary circle, `pi cos^2(0.5) / n^2`, the cheapest classical
//! filling. A binary cut of the graph therefore costs
//! `edge_boundary * cut_disc_area`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{check_epsilon, check_scale};
use crate::graph::{
    edge_boundary, exact_expansion, spectral_expansion_bound, ExpansionCertificate, Multigraph,
    VertexCut, ENUMERATION_LIMIT,
};

/// Geometric constants of the model at scale `n`, in current length units.
///
/// Freshly built models use unnormalized units (length factor 1); after
/// [`HandlebodyModel::normalize`] all areas carry the squared factor and all
/// volumes the cubed factor.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryParams {
    pub n: u32,
    /// Volume of one vertex ball, `4 pi / (3 n^3)`.
    pub vertex_volume: f64,
    /// Area of one hole cap, `2 pi (1 - sin 0.5) / n^2`.
    pub hole_cap_area: f64,
    /// Area of the flat disc that severs one hole, `pi cos^2(0.5) / n^2`.
    pub cut_disc_area: f64,
    /// Vertex count times vertex volume.
    pub total_volume: f64,
    pub normalization_length_factor: f64,
}

impl GeometryParams {
    pub fn new(n: u32, vertex_count: usize) -> Result<Self> {
        check_scale(n)?;
        let nf = f64::from(n);
        let n2 = nf * nf;
        let vertex_volume = 4.0 * PI / (3.0 * nf.powi(3));
        Ok(Self {
            n,
            vertex_volume,
            hole_cap_area: 2.0 * PI * (1.0 - (0.5f64).sin()) / n2,
            cut_disc_area: PI * (0.5f64).cos().powi(2) / n2,
            total_volume: vertex_count as f64 * vertex_volume,
            normalization_length_factor: 1.0,
        })
    }

    /// Squared length factor; converts unnormalized areas to current units.
    pub fn area_unit(&self) -> f64 {
        self.normalization_length_factor * self.normalization_length_factor
    }

    fn scaled(&self, s: f64) -> Self {
        Self {
            n: self.n,
            vertex_volume: self.vertex_volume * s.powi(3),
            hole_cap_area: self.hole_cap_area * s * s,
            cut_disc_area: self.cut_disc_area * s * s,
            total_volume: self.total_volume * s.powi(3),
            normalization_length_factor: self.normalization_length_factor * s,
        }
    }
}

/// Anything that assigns each cell a fraction of its volume to side `U1`.
pub trait VolumeSplit {
    fn cell_count(&self) -> usize;
    fn u1_fraction(&self, v: usize) -> f64;
}

impl VolumeSplit for VertexCut {
    fn cell_count(&self) -> usize {
        self.len()
    }
    fn u1_fraction(&self, v: usize) -> f64 {
        if self.contains(v) {
            1.0
        } else {
            0.0
        }
    }
}

/// A cut that may split cells: `x[v]` is the fraction of cell `v`'s volume
/// on side `U1`. Construction flips sides if needed so that `U1` is the
/// side of smaller volume.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalCut {
    x: Vec<f64>,
    epsilon: f64,
    per_cell_area: Option<Vec<f64>>,
}

impl VolumeSplit for FractionalCut {
    fn cell_count(&self) -> usize {
        self.x.len()
    }
    fn u1_fraction(&self, v: usize) -> f64 {
        self.x[v]
    }
}

impl FractionalCut {
    pub fn new(x: Vec<f64>, epsilon: f64, per_cell_area: Option<Vec<f64>>) -> Result<Self> {
        check_epsilon(epsilon)?;
        for (v, &f) in x.iter().enumerate() {
            if !(0.0..=1.0).contains(&f) {
                return Err(Error::InvalidCut(format!("fraction {f} at cell {v} outside [0, 1]")));
            }
        }
        if let Some(a) = &per_cell_area {
            if a.len() != x.len() {
                return Err(Error::InvalidCut("per-cell area length mismatch".into()));
            }
            if let Some(&bad) = a.iter().find(|&&v| v < 0.0 || !v.is_finite()) {
                return Err(Error::InvalidCut(format!("per-cell area {bad} invalid")));
            }
        }
        let u1: f64 = x.iter().sum();
        let x = if u1 > x.len() as f64 - u1 {
            x.into_iter().map(|f| 1.0 - f).collect()
        } else {
            x
        };
        Ok(Self { x, epsilon, per_cell_area })
    }

    pub fn from_binary(cut: &VertexCut, epsilon: f64, per_cell_area: Option<Vec<f64>>) -> Result<Self> {
        let x = cut.membership().iter().map(|&b| if b { 1.0 } else { 0.0 }).collect();
        Self::new(x, epsilon, per_cell_area)
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn fractions(&self) -> &[f64] {
        &self.x
    }

    pub fn per_cell_area(&self) -> Option<&[f64]> {
        self.per_cell_area.as_deref()
    }

    pub fn is_binary(&self) -> bool {
        self.x.iter().all(|&f| f == 0.0 || f == 1.0)
    }
}

/// Cell classification against the thresholds `eps` and `1 - eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellClass {
    /// Both sides hold more than an `eps` fraction of the cell.
    CutCell,
    /// At least a `1 - eps` fraction lies in `U1`.
    MostlyU1,
    /// At most an `eps` fraction lies in `U1`.
    MostlyU2,
}

/// Classify every cell of a cut. The cut-cell interval is open; the two
/// mostly intervals are closed at the thresholds.
pub fn classify_cells(cut: &FractionalCut) -> Vec<CellClass> {
    let eps = cut.epsilon;
    cut.x
        .iter()
        .map(|&f| {
            if f >= 1.0 - eps {
                CellClass::MostlyU1
            } else if f <= eps {
                CellClass::MostlyU2
            } else {
                CellClass::CutCell
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCase {
    Case1,
    Case2A,
    Case2B,
}

impl TheoremCase {
    pub fn name(&self) -> &'static str {
        match self {
            TheoremCase::Case1 => "CASE_1",
            TheoremCase::Case2A => "CASE_2A",
            TheoremCase::Case2B => "CASE_2B",
        }
    }
}

/// Executable record of the case analysis on one balanced cut.
///
/// `satisfied` is `Some(sum of per-cell areas >= bound)` when areas were
/// supplied and `None` when they were not.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub n1: usize,
    pub n2: usize,
    pub k1: usize,
    pub k2: usize,
    pub boundary_hole_count: usize,
    pub fired_case: TheoremCase,
    pub bound: f64,
    pub satisfied: Option<bool>,
}

impl CaseReport {
    pub fn to_text(&self) -> String {
        format!(
            "case = {}\nn1 = {}\nn2 = {}\nk1 = {}\nk2 = {}\nboundary_holes = {}\nbound = {}\nsatisfied = {}\n",
            self.fired_case.name(),
            self.n1,
            self.n2,
            self.k1,
            self.k2,
            self.boundary_hole_count,
            self.bound,
            match self.satisfied {
                Some(true) => "true",
                Some(false) => "false",
                None => "unassessed",
            }
        )
    }
}

/// The assembled model: graph, geometric constants, and the expansion
/// certificate computed from this exact graph at build time.
#[derive(Debug, Clone, PartialEq)]
pub struct HandlebodyModel {
    graph: Multigraph,
    params: GeometryParams,
    expansion: ExpansionCertificate,
}

/// Assemble the model for a connected 3-regular graph at scale `n`.
/// Expansion is certified exactly up to the enumeration limit and
/// spectrally beyond it.
pub fn build_model(graph: Multigraph, n: u32) -> Result<HandlebodyModel> {
    if graph.regular_degree() != Some(3) {
        return Err(Error::NotThreeRegular);
    }
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let params = GeometryParams::new(n, graph.vertex_count())?;
    let expansion = if graph.vertex_count() <= ENUMERATION_LIMIT {
        exact_expansion(&graph)?
    } else {
        spectral_expansion_bound(&graph)?
    };
    Ok(HandlebodyModel { graph, params, expansion })
}

/// Lower bound `eps^2 n min(1/8, c/4)` on the area of any balanced cut, in
/// unnormalized units. The three case floors are `eps^2 n / 2`,
/// `eps^2 n / 8`, and `c eps^2 n / 4`; the minimum is over the latter two.
pub fn theorem_lower_bound(n: u32, eps: f64, c: f64) -> Result<f64> {
    check_scale(n)?;
    check_epsilon(eps)?;
    if c <= 0.0 {
        return Err(Error::NonpositiveExpansion(c));
    }
    Ok(eps * eps * f64::from(n) * (0.125f64).min(c / 4.0))
}

impl HandlebodyModel {
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn params(&self) -> &GeometryParams {
        &self.params
    }

    pub fn expansion(&self) -> &ExpansionCertificate {
        &self.expansion
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Area of the discrete cut surface: one flat disc per boundary edge.
    pub fn discrete_cut_area(&self, cut: &VertexCut) -> Result<f64> {
        let size = cut.size();
        if size == 0 || size == cut.len() {
            return Err(Error::EmptyOrFullCut);
        }
        Ok(edge_boundary(&self.graph, cut) as f64 * self.params.cut_disc_area)
    }

    /// Volumes of the two sides of a cut, binary or fractional.
    pub fn side_volumes<C: VolumeSplit>(&self, cut: &C) -> (f64, f64) {
        assert_eq!(cut.cell_count(), self.vertex_count(), "cut length must match vertex count");
        let u1: f64 = (0..cut.cell_count()).map(|v| cut.u1_fraction(v)).sum();
        let m = cut.cell_count() as f64;
        (u1 * self.params.vertex_volume, (m - u1) * self.params.vertex_volume)
    }

    /// Whether both sides exceed an `eps` fraction of the total volume.
    pub fn is_balanced<C: VolumeSplit>(&self, cut: &C, eps: f64) -> bool {
        let (a, b) = self.side_volumes(cut);
        let threshold = eps * self.params.total_volume;
        a > threshold && b > threshold
    }

    /// The theorem bound with this model's certified constant, in current
    /// units.
    pub fn theorem_bound(&self, eps: f64) -> Result<f64> {
        let base = theorem_lower_bound(self.params.n, eps, self.expansion.constant())?;
        Ok(base * self.params.area_unit())
    }

    /// Replay the case analysis on a balanced fractional cut.
    ///
    /// Thresholds generalize the cube scale `n^3` to the actual vertex
    /// count `m`: case 1 needs `n1 >= eps m / 2`, case 2 needs
    /// `n2 >= eps m / 2`, and the split within case 2 is at `eps m / 4`.
    /// Per-cell areas drive the `A1`/`A2` split; a binary cut without areas
    /// takes the conservative `k1 = 0` route, while a genuinely fractional
    /// cut must supply them.
    pub fn case_analysis(&self, cut: &FractionalCut) -> Result<CaseReport> {
        let m = self.vertex_count();
        assert_eq!(cut.cell_count(), m, "cut length must match vertex count");
        let eps = cut.epsilon;
        if !self.is_balanced(cut, eps) {
            return Err(Error::UnbalancedCut);
        }
        let unit = self.params.area_unit();
        let n2f = f64::from(self.params.n).powi(2);
        let mf = m as f64;
        let classes = classify_cells(cut);
        let n1 = classes.iter().filter(|&&c| c == CellClass::CutCell).count();
        let n2 = classes.iter().filter(|&&c| c == CellClass::MostlyU1).count();

        let areas = cut.per_cell_area();
        let satisfied_for = |bound: f64| {
            areas.map(|a| {
                let sum: f64 = a.iter().sum();
                sum >= bound - bound.abs() * 1e-9 - 1e-12
            })
        };

        if n1 as f64 >= eps * mf / 2.0 {
            let bound = n1 as f64 * eps / n2f * unit;
            return Ok(CaseReport {
                n1,
                n2,
                k1: 0,
                k2: 0,
                boundary_hole_count: 0,
                fired_case: TheoremCase::Case1,
                bound,
                satisfied: satisfied_for(bound),
            });
        }
        if (n2 as f64) < eps * mf / 2.0 {
            return Err(Error::CaseSplitViolation(format!(
                "n1 = {n1} and n2 = {n2} both below eps*m/2 = {}",
                eps * mf / 2.0
            )));
        }

        // A1: mostly-U1 cells whose cut area already meets eps / (2 n^2).
        let a1_threshold = eps / (2.0 * n2f) * unit;
        let mut a2_membership = vec![false; m];
        let mut k1 = 0usize;
        let mut k2 = 0usize;
        match areas {
            Some(a) => {
                for v in 0..m {
                    if classes[v] == CellClass::MostlyU1 {
                        if a[v] >= a1_threshold {
                            k1 += 1;
                        } else {
                            a2_membership[v] = true;
                            k2 += 1;
                        }
                    }
                }
            }
            None if cut.is_binary() => {
                // No area information: nothing qualifies for A1.
                for v in 0..m {
                    if classes[v] == CellClass::MostlyU1 {
                        a2_membership[v] = true;
                        k2 += 1;
                    }
                }
            }
            None => return Err(Error::MissingAreas),
        }

        if k1 as f64 >= eps * mf / 4.0 {
            let bound = k1 as f64 * eps / (2.0 * n2f) * unit;
            return Ok(CaseReport {
                n1,
                n2,
                k1,
                k2,
                boundary_hole_count: 0,
                fired_case: TheoremCase::Case2A,
                bound,
                satisfied: satisfied_for(bound),
            });
        }

        // Expander route: the holes on the boundary of the A2 cells.
        if 2 * k2 > m {
            return Err(Error::CaseSplitViolation(format!(
                "expander hypothesis needs |A2| <= m/2, got {k2} of {m}"
            )));
        }
        let c = self.expansion.constant();
        let holes = edge_boundary(&self.graph, &VertexCut::new(a2_membership));
        if (holes as f64) < c * k2 as f64 - 1e-9 {
            return Err(Error::CaseSplitViolation(format!(
                "certified expansion violated: {holes} holes for {k2} cells at c = {c}"
            )));
        }
        let bound = (holes as f64).max(c * eps * mf / 4.0) * eps / n2f * unit;
        Ok(CaseReport {
            n1,
            n2,
            k1,
            k2,
            boundary_hole_count: holes,
            fired_case: TheoremCase::Case2B,
            bound,
            satisfied: satisfied_for(bound),
        })
    }

    /// Rescale so the total volume becomes `target`. Areas pick up the
    /// squared length factor, volumes the cubed one.
    pub fn normalize(&self, target_total_volume: f64) -> Result<HandlebodyModel> {
        if target_total_volume <= 0.0 {
            return Err(Error::NonpositiveTarget(target_total_volume));
        }
        let s = (target_total_volume / self.params.total_volume).cbrt();
        Ok(HandlebodyModel {
            graph: self.graph.clone(),
            params: self.params.scaled(s),
            expansion: self.expansion.clone(),
        })
    }

    /// Graph text plus a key-value parameter block.
    pub fn to_text(&self) -> Result<String> {
        let mut out = self.graph.to_text()?;
        out.push('\n');
        out.push_str(&format!("n = {}\n", self.params.n));
        out.push_str(&format!("epsilon_default = {}\n", crate::DEFAULT_EPSILON));
        out.push_str(&format!("c = {}\n", self.expansion.constant()));
        out.push_str(&format!("c_method = {}\n", self.expansion.method_name()));
        match &self.expansion {
            ExpansionCertificate::Exact { witness, .. } => {
                out.push_str(&format!("witness = {witness}\n"));
            }
            ExpansionCertificate::Spectral { mu2, .. } => {
                out.push_str(&format!("mu2 = {mu2}\n"));
            }
        }
        out.push_str(&format!(
            "normalization_length_factor = {}\n",
            self.params.normalization_length_factor
        ));
        Ok(out)
    }

    pub fn from_text(text: &str) -> Result<HandlebodyModel> {
        let (graph_part, kv_part) = text
            .split_once("\n\n")
            .ok_or_else(|| Error::Parse("expected graph block, blank line, parameter block".into()))?;
        let graph = Multigraph::from_text(graph_part)?;
        let mut n = None;
        let mut c = None;
        let mut method = None;
        let mut witness = None;
        let mut mu2 = None;
        let mut factor = 1.0f64;
        for line in kv_part.lines().filter(|l| !l.trim().is_empty()) {
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad parameter line: {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "n" => n = Some(value.parse().map_err(|_| Error::Parse("bad n".into()))?),
                "c" => c = Some(value.parse().map_err(|_| Error::Parse("bad c".into()))?),
                "c_method" => method = Some(value.to_string()),
                "witness" => {
                    witness = Some(VertexCut::new(
                        value
                            .chars()
                            .map(|ch| match ch {
                                '0' => Ok(false),
                                '1' => Ok(true),
                                _ => Err(Error::Parse("bad witness string".into())),
                            })
                            .collect::<Result<_>>()?,
                    ))
                }
                "mu2" => mu2 = Some(value.parse().map_err(|_| Error::Parse("bad mu2".into()))?),
                "normalization_length_factor" => {
                    factor = value.parse().map_err(|_| Error::Parse("bad factor".into()))?
                }
                "epsilon_default" => {}
                other => return Err(Error::Parse(format!("unknown parameter key {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing n".into()))?;
        let constant = c.ok_or_else(|| Error::Parse("missing c".into()))?;
        let expansion = match method.as_deref() {
            Some("exact") => ExpansionCertificate::Exact {
                constant,
                witness: witness.ok_or_else(|| Error::Parse("missing witness".into()))?,
            },
            Some("spectral") => ExpansionCertificate::Spectral {
                constant,
                mu2: mu2.ok_or_else(|| Error::Parse("missing mu2".into()))?,
            },
            _ => return Err(Error::Parse("missing or unknown c_method".into())),
        };
        let params = GeometryParams::new(n, graph.vertex_count())?.scaled(factor);
        Ok(HandlebodyModel { graph, params, expansion })
    }
}
