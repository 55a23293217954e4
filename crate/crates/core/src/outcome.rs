/// Identifies which solver produced an outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    BdBrute,
    BdFptDag,
    BdLayered,
    BdDiameter,
    BdOutDegree,
    BdVertexCover,
    BdAuto,
    MpBrute,
    MpLayered,
    MpDiameter,
    MpOutDegree,
    MpVertexCover,
    MpAuto,
}

impl Algorithm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::BdBrute => "bd/brute",
            Algorithm::BdFptDag => "bd/fpt-dag",
            Algorithm::BdLayered => "bd/layered",
            Algorithm::BdDiameter => "bd/diam",
            Algorithm::BdOutDegree => "bd/outdeg",
            Algorithm::BdVertexCover => "bd/vc",
            Algorithm::BdAuto => "bd/auto",
            Algorithm::MpBrute => "mp/brute",
            Algorithm::MpLayered => "mp/layered",
            Algorithm::MpDiameter => "mp/diam",
            Algorithm::MpOutDegree => "mp/outdeg",
            Algorithm::MpVertexCover => "mp/vc",
            Algorithm::MpAuto => "mp/auto",
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of one solver run.
///
/// `optimum` is present exactly when the run certified the exact value
/// (minimum cost for broadcast domination, maximum size for multipacking);
/// `witness` then attains it. A decision-mode run that answers NO leaves
/// both empty. `decision` is present exactly when a target was supplied.
#[derive(Debug, Clone)]
pub struct SolveOutcome<W> {
    pub optimum: Option<u32>,
    pub witness: Option<W>,
    pub algorithm: Algorithm,
    pub nodes_explored: u64,
    pub decision: Option<bool>,
}

impl<W> SolveOutcome<W> {
    pub fn decision_no(algorithm: Algorithm, nodes_explored: u64) -> Self {
        SolveOutcome {
            optimum: None,
            witness: None,
            algorithm,
            nodes_explored,
            decision: Some(false),
        }
    }
}
