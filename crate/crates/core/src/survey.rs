//! Exhaustive and corpus-driven surveys of achieved `(dim, depth, reg)`
//! tuples, compared against the regions in [`crate::region`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::BufRead;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::graph_betti_table;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::independence::max_independent;
use crate::linalg::FieldSpec;
use crate::region::{enumerate_cstar, enumerate_cstarstar, Tuple2, Tuple3};

/// Largest `n` for which every labeled graph is generated in-process.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SurveyOptions {
    pub field: FieldSpec,
    /// Worker threads; `None` uses every core.
    pub jobs: Option<usize>,
    /// Tally disconnected graphs separately instead of skipping them.
    pub include_disconnected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleRecord {
    pub count: u64,
    /// Lexicographically least graph6 string among the achievers.
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurveyResult {
    pub n: usize,
    pub field: FieldSpec,
    pub achieved: BTreeMap<Tuple3, TupleRecord>,
    /// Connected graphs examined; equals the sum of `achieved` counts.
    pub scanned: u64,
    pub disconnected: BTreeMap<Tuple3, TupleRecord>,
    pub skipped_disconnected: u64,
}

#[derive(Clone, Debug, Default)]
struct Tally {
    connected: BTreeMap<Tuple3, TupleRecord>,
    disconnected: BTreeMap<Tuple3, TupleRecord>,
    scanned: u64,
    skipped: u64,
}

fn record(map: &mut BTreeMap<Tuple3, TupleRecord>, t: Tuple3, count: u64, witness: String) {
    map.entry(t)
        .and_modify(|r| {
            r.count += count;
            if witness < r.witness {
                r.witness = witness.clone();
            }
        })
        .or_insert(TupleRecord { count, witness });
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (t, r) in other.connected {
            record(&mut self.connected, t, r.count, r.witness);
        }
        for (t, r) in other.disconnected {
            record(&mut self.disconnected, t, r.count, r.witness);
        }
        self.scanned += other.scanned;
        self.skipped += other.skipped;
        self
    }
}

/// `(dim, depth, reg)` of `R/I(g)`.
pub fn dim_depth_reg(g: &Graph, field: FieldSpec) -> Result<Tuple3> {
    let table = graph_betti_table(g, field)?;
    Ok(Tuple3::new(
        max_independent(g),
        g.n() - table.projdim(),
        table.regularity(),
    ))
}

fn visit(mut tally: Tally, g: &Graph, opts: &SurveyOptions) -> Result<Tally> {
    let connected = g.is_connected();
    if !connected && !opts.include_disconnected {
        tally.skipped += 1;
        return Ok(tally);
    }
    let t = dim_depth_reg(g, opts.field)?;
    if connected {
        tally.scanned += 1;
        record(&mut tally.connected, t, 1, to_graph6(g));
    } else {
        tally.skipped += 1;
        record(&mut tally.disconnected, t, 1, to_graph6(g));
    }
    Ok(tally)
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn finish(n: usize, opts: &SurveyOptions, tally: Tally) -> SurveyResult {
    SurveyResult {
        n,
        field: opts.field,
        achieved: tally.connected,
        scanned: tally.scanned,
        disconnected: tally.disconnected,
        skipped_disconnected: tally.skipped,
    }
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::SizeLimit {
            what: "labeled enumeration (supply a graph6 corpus instead)",
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    Ok(())
}

/// Every connected labeled graph on `n ≤ 7` vertices, each exactly once, in
/// edge-mask order.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enumerable(n)?;
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs)
        .map(move |mask| Graph::from_edge_mask(n, mask))
        .filter(Graph::is_connected))
}

/// Parses graph6 lines; blank lines are skipped.
pub fn parse_corpus(reader: impl BufRead) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let g = parse_graph6(trimmed).map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        out.push(g);
    }
    Ok(out)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let file = std::fs::File::open(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_corpus(std::io::BufReader::new(file))
}

/// Tallies the tuples of `graphs`, all of which must have `n` vertices.
pub fn achieved_tuples(n: usize, graphs: &[Graph], opts: &SurveyOptions) -> Result<SurveyResult> {
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::VertexCount {
            expected: n,
            found: g.n(),
        });
    }
    let tally = in_pool(opts.jobs, || {
        graphs
            .par_iter()
            .try_fold(Tally::default, |t, g| visit(t, g, opts))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    })??;
    Ok(finish(n, opts, tally))
}

/// [`achieved_tuples`] over every labeled graph on `n ≤ 7` vertices.
pub fn survey_all(n: usize, opts: &SurveyOptions) -> Result<SurveyResult> {
    check_enumerable(n)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let tally = in_pool(opts.jobs, || {
        (0..1u64 << pairs)
            .into_par_iter()
            .try_fold(Tally::default, |t, mask| {
                visit(t, &Graph::from_edge_mask(n, mask), opts)
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    })??;
    Ok(finish(n, opts, tally))
}

#[derive(Serialize)]
struct AchievedRow<'a> {
    d: usize,
    p: usize,
    r: usize,
    count: u64,
    witness: &'a str,
}

#[derive(Serialize)]
struct SurveyJson<'a> {
    n: usize,
    achieved: Vec<AchievedRow<'a>>,
    scanned: u64,
}

impl SurveyResult {
    pub fn tuples(&self) -> BTreeSet<Tuple3> {
        self.achieved.keys().copied().collect()
    }

    pub fn projected(&self) -> BTreeSet<Tuple2> {
        self.achieved.keys().map(|t| t.project()).collect()
    }

    pub fn to_json(&self) -> String {
        let achieved = self
            .achieved
            .iter()
            .map(|(t, r)| AchievedRow {
                d: t.d,
                p: t.p,
                r: t.r,
                count: r.count,
                witness: &r.witness,
            })
            .collect();
        serde_json::to_string(&SurveyJson {
            n: self.n,
            achieved,
            scanned: self.scanned,
        })
        .expect("survey serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,d,p,r,count,witness\n");
        for (t, r) in &self.achieved {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                self.n, t.d, t.p, t.r, r.count, r.witness
            ));
        }
        out
    }
}

/// Comparison of an achieved set with a predicted region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict<T> {
    pub n: usize,
    pub expected: usize,
    pub achieved: usize,
    /// Predicted but never achieved.
    pub missing: Vec<T>,
    /// Achieved outside the region, with a witness.
    pub unexpected: Vec<(T, String)>,
}

impl<T> Verdict<T> {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

impl<T: fmt::Display> fmt::Display for Verdict<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} n={} expected={} achieved={}",
            self.n, self.expected, self.achieved
        )?;
        for t in &self.missing {
            write!(f, "\n  missing tuple {t}: no witness found")?;
        }
        for (t, w) in &self.unexpected {
            write!(f, "\n  unexpected tuple {t}: witness {w}")?;
        }
        Ok(())
    }
}

fn compare<T: Ord + Copy>(
    n: usize,
    expected: &BTreeSet<T>,
    achieved: &BTreeMap<T, String>,
) -> Verdict<T> {
    Verdict {
        n,
        expected: expected.len(),
        achieved: achieved.len(),
        missing: expected
            .iter()
            .filter(|t| !achieved.contains_key(t))
            .copied()
            .collect(),
        unexpected: achieved
            .iter()
            .filter(|(t, _)| !expected.contains(t))
            .map(|(t, w)| (*t, w.clone()))
            .collect(),
    }
}

/// Achieved `(d, p, r)` set against `C**(n)`.
pub fn check_theorem_main(survey: &SurveyResult) -> Result<Verdict<Tuple3>> {
    let expected: BTreeSet<Tuple3> = enumerate_cstarstar(survey.n)?.into_iter().collect();
    let achieved = survey
        .achieved
        .iter()
        .map(|(t, r)| (*t, r.witness.clone()))
        .collect();
    Ok(compare(survey.n, &expected, &achieved))
}

/// Achieved `(d, p)` projection against `C*(n)`.
pub fn check_corollary(survey: &SurveyResult) -> Result<Verdict<Tuple2>> {
    let expected: BTreeSet<Tuple2> = enumerate_cstar(survey.n)?.into_iter().collect();
    let mut achieved: BTreeMap<Tuple2, String> = BTreeMap::new();
    for (t, r) in &survey.achieved {
        let w = achieved
            .entry(t.project())
            .or_insert_with(|| r.witness.clone());
        if r.witness < *w {
            *w = r.witness.clone();
        }
    }
    Ok(compare(survey.n, &expected, &achieved))
}

/// Full labeled scan at `n ≤ 7` compared against `C**(n)`.
pub fn verify_theorem_main(n: usize, field: FieldSpec) -> Result<Verdict<Tuple3>> {
    check_theorem_main(&survey_all(
        n,
        &SurveyOptions {
            field,
            ..Default::default()
        },
    )?)
}

/// Full labeled scan at `n ≤ 7` compared against `C*(n)`.
pub fn verify_corollary(n: usize, field: FieldSpec) -> Result<Verdict<Tuple2>> {
    check_corollary(&survey_all(
        n,
        &SurveyOptions {
            field,
            ..Default::default()
        },
    )?)
}

/// Connected graph on `n` vertices: a random recursive tree plus every
/// other pair with a density drawn uniformly from `[0, 1)`.
pub fn random_connected_graph(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    let density: f64 = rng.gen();
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        for u in 0..v {
            if u == parent || rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    // shuffle labels so the tree is not biased towards low vertices
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
}

/// `count` seeded random connected graphs with sizes drawn from `sizes`.
pub fn random_connected_graphs(count: usize, sizes: &[usize], seed: u64) -> Result<Vec<Graph>> {
    if sizes.is_empty() {
        return Err(Error::Domain("no graph sizes given".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = sizes[rng.gen_range(0..sizes.len())];
            random_connected_graph(n, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(matches!(
            enumerate_connected(8),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn corpus_parsing() {
        assert!(parse_corpus("".as_bytes()).unwrap().is_empty());
        let one = parse_corpus("A_\n".as_bytes()).unwrap();
        assert_eq!(one, vec![Graph::complete(2).unwrap()]);
        let err = parse_corpus("A_\n\nA`\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn single_graph_streams() {
        let opts = SurveyOptions::default();
        let s = achieved_tuples(5, &[Graph::star(5).unwrap()], &opts).unwrap();
        assert_eq!(
            s.tuples().into_iter().collect::<Vec<_>>(),
            vec![Tuple3::new(4, 1, 1)]
        );
        let s = achieved_tuples(5, &[Graph::cycle(5).unwrap()], &opts).unwrap();
        assert_eq!(
            s.tuples().into_iter().collect::<Vec<_>>(),
            vec![Tuple3::new(2, 2, 2)]
        );
        let s = achieved_tuples(5, &[], &opts).unwrap();
        assert!(s.achieved.is_empty() && s.scanned == 0);
        assert!(matches!(
            achieved_tuples(5, &[Graph::star(4).unwrap()], &opts),
            Err(Error::VertexCount {
                expected: 5,
                found: 4
            })
        ));
    }

    #[test]
    fn small_theorem_checks() {
        for n in 3..=5 {
            assert!(verify_corollary(n, Q).unwrap().passed());
        }
        for n in 3..=4 {
            let v = verify_theorem_main(n, Q).unwrap();
            assert!(v.passed(), "{v}");
        }
        // the path on five vertices has dim + reg = n without being a star
        let v = verify_theorem_main(5, Q).unwrap();
        assert!(v.missing.is_empty());
        assert_eq!(
            v.unexpected,
            vec![(Tuple3::new(3, 2, 2), "DBg".to_string())]
        );
        assert_eq!(
            parse_graph6("DBg").unwrap().edges(),
            vec![(0, 4), (1, 3), (2, 3), (2, 4)]
        );
    }

    #[test]
    fn stars_only_corpus_fails_corollary() {
        let s = achieved_tuples(6, &[Graph::star(6).unwrap()], &SurveyOptions::default()).unwrap();
        let v = check_corollary(&s).unwrap();
        assert!(!v.passed() && v.unexpected.is_empty());
        assert!(v
            .to_string()
            .contains("missing tuple (1, 1): no witness found"));
    }

    #[test]
    fn witnesses_are_least_and_counts_sum() {
        let opts = SurveyOptions {
            field: Q,
            jobs: Some(2),
            include_disconnected: false,
        };
        let s = survey_all(4, &opts).unwrap();
        assert_eq!(s.scanned, 38);
        assert_eq!(s.achieved.values().map(|r| r.count).sum::<u64>(), s.scanned);
        assert_eq!(s.skipped_disconnected, 64 - 38);
        let graphs: Vec<Graph> = enumerate_connected(4).unwrap().collect();
        for (t, r) in &s.achieved {
            let least = graphs
                .iter()
                .filter(|g| dim_depth_reg(g, Q).unwrap() == *t)
                .map(to_graph6)
                .min()
                .unwrap();
            assert_eq!(r.witness, least);
        }
        assert_eq!(
            s,
            survey_all(
                4,
                &SurveyOptions {
                    jobs: Some(1),
                    ..opts
                }
            )
            .unwrap()
        );
    }

    #[test]
    fn disconnected_are_separate() {
        let opts = SurveyOptions {
            include_disconnected: true,
            ..Default::default()
        };
        let s = survey_all(3, &opts).unwrap();
        assert_eq!(s.scanned, 4);
        assert_eq!(s.skipped_disconnected, 4);
        // K₂ ⊔ K₁ sits on the boundary dim + reg = n without being a star
        assert!(s.disconnected.contains_key(&Tuple3::new(2, 2, 1)));
    }

    #[test]
    fn json_and_csv() {
        let s = achieved_tuples(5, &[Graph::cycle(5).unwrap()], &SurveyOptions::default()).unwrap();
        assert_eq!(
            s.to_json(),
            r#"{"n":5,"achieved":[{"d":2,"p":2,"r":2,"count":1,"witness":"DhW"}],"scanned":1}"#
                .replace("DhW", &to_graph6(&Graph::cycle(5).unwrap()))
        );
        assert_eq!(s.to_csv().lines().count(), 2);
    }

    #[test]
    fn random_graphs() {
        let a = random_connected_graphs(50, &[7, 8, 9], 42).unwrap();
        assert_eq!(a, random_connected_graphs(50, &[7, 8, 9], 42).unwrap());
        assert!(a
            .iter()
            .all(|g| g.is_connected() && (7..=9).contains(&g.n())));
    }
}
