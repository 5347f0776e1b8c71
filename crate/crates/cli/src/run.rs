//! Command dispatch: one request in, one result document out.

use std::time::Instant;

use plurality_core::instances::{random_profile, x3c_reduce, ReductionBranch, X3cInstance};
use plurality_core::model::{Ballot, Outcome};
use plurality_core::oracle::{brute_force_pne, tree_spne_with};
use plurality_core::sequential::{
    mandate_permutation, spne_counts_with, spne_history_with, two_candidate_play,
    two_candidate_profile, Engine, Side, SolverBounds, SpneResult, TieBreak, VotingOrder,
};
use plurality_core::simultaneous::{enumerate_pne_outcomes, find_pne, is_pne, PneCheck};
use plurality_core::{CandidateId, WideProfile};

use crate::document::{
    parse_election, parse_x3c, Deviation, Diagnostics, ElectionDocument, ReductionSummary,
    ResultDocument, RoundRecord,
};
use crate::error::CliError;

/// Rendering of an abstention in output documents.
pub const ABSTAIN: &str = "ABSTAIN";

/// Exit status when `pne-find` proves that no equilibrium exists.
pub const EXIT_NO_PNE: u8 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Request {
    Validate,
    PneCheck { ballots: Vec<String> },
    PneFind,
    PneEnum,
    PneBrute,
    Spne { engine: Option<Engine> },
    SpneOracle,
    TwoCand,
    Mandate { n_a: usize, n_b: usize, k: usize },
    ReduceX3c,
    Gen { n: usize, m: usize, seed: u64 },
}

impl Request {
    pub fn name(&self) -> &'static str {
        match self {
            Request::Validate => "validate",
            Request::PneCheck { .. } => "pne-check",
            Request::PneFind => "pne-find",
            Request::PneEnum => "pne-enum",
            Request::PneBrute => "pne-brute",
            Request::Spne { .. } => "spne",
            Request::SpneOracle => "spne-oracle",
            Request::TwoCand => "two-cand",
            Request::Mandate { .. } => "mandate",
            Request::ReduceX3c => "reduce-x3c",
            Request::Gen { .. } => "gen",
        }
    }

    /// Whether the command reads an input file.
    pub fn needs_input(&self) -> bool {
        !matches!(self, Request::Mandate { .. } | Request::Gen { .. })
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub skip_validate: bool,
    pub no_timing: bool,
    pub bounds: SolverBounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub document: ResultDocument,
    /// One-line human summary for stderr.
    pub summary: String,
    pub exit_code: u8,
}

impl Response {
    fn ok(document: ResultDocument, summary: String) -> Self {
        Response {
            document,
            summary,
            exit_code: 0,
        }
    }
}

/// Runs `request` on the text of its input file (if it takes one).
pub fn run(
    request: &Request,
    input: Option<&str>,
    opts: &RunOptions,
) -> Result<Response, CliError> {
    let start = Instant::now();
    let input =
        || input.ok_or_else(|| CliError::Input(format!("{} needs an input file", request.name())));
    let mut response = match request {
        Request::Mandate { n_a, n_b, k } => mandate(*n_a, *n_b, *k)?,
        Request::Gen { n, m, seed } => generate(*n, *m, *seed)?,
        Request::ReduceX3c => reduce(input()?)?,
        _ => {
            let doc = parse_election(input()?)?;
            let p = doc.profile(!opts.skip_validate)?;
            let ctx = Context { doc: &doc, p: &p };
            ctx.dispatch(request, opts).map_err(|e| match e {
                Failure::Core(e) => CliError::from_core(e, &doc),
                Failure::Cli(e) => e,
            })?
        }
    };
    response.document.command = request.name().to_string();
    if !opts.no_timing {
        let elapsed = start.elapsed().as_micros() as u64;
        response
            .document
            .diagnostics
            .get_or_insert_with(Diagnostics::default)
            .elapsed_us = Some(elapsed);
    }
    Ok(response)
}

enum Failure {
    Core(plurality_core::Error),
    Cli(CliError),
}

impl From<plurality_core::Error> for Failure {
    fn from(e: plurality_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Cli(e)
    }
}

struct Context<'a> {
    doc: &'a ElectionDocument,
    p: &'a WideProfile,
}

impl Context<'_> {
    fn name(&self, c: CandidateId) -> String {
        self.doc.candidates[c.0].clone()
    }

    fn voter(&self, i: usize) -> String {
        self.doc.voters[i]
            .name
            .clone()
            .unwrap_or_else(|| i.to_string())
    }

    fn ballot(&self, b: Ballot) -> String {
        b.candidate()
            .map_or_else(|| ABSTAIN.to_string(), |c| self.name(c))
    }

    fn outcome(&self, o: Outcome) -> Vec<String> {
        o.iter().map(|c| self.name(c)).collect()
    }

    fn show_outcome(&self, o: Outcome) -> String {
        format!("{{{}}}", self.outcome(o).join(", "))
    }

    fn ballots(&self, b: &[Ballot]) -> Vec<String> {
        b.iter().map(|&x| self.ballot(x)).collect()
    }

    fn parse_ballot(&self, s: &str) -> Result<Ballot, CliError> {
        if s == ABSTAIN {
            return Ok(Ballot::Abstain);
        }
        self.doc
            .candidates
            .iter()
            .position(|c| c == s)
            .map(Ballot::vote)
            .ok_or_else(|| CliError::Input(format!("unknown candidate '{s}' in ballots")))
    }

    fn rounds(&self, order: &VotingOrder, votes: &[Ballot]) -> Vec<RoundRecord> {
        votes
            .iter()
            .enumerate()
            .map(|(t, &b)| RoundRecord {
                round: t,
                voter: self.voter(order.voter_at(t)),
                ballot: self.ballot(b),
            })
            .collect()
    }

    fn dispatch(&self, request: &Request, opts: &RunOptions) -> Result<Response, Failure> {
        let p = self.p;
        Ok(match request {
            Request::Validate => Response::ok(
                ResultDocument {
                    valid: Some(true),
                    ..Default::default()
                },
                format!("valid: {} voters, {} candidates", p.n(), p.m()),
            ),
            Request::PneCheck { ballots } => {
                let b = ballots
                    .iter()
                    .map(|s| self.parse_ballot(s))
                    .collect::<Result<Vec<_>, _>>()?;
                let check = is_pne(p, &b)?;
                let deviation = match check {
                    PneCheck::Equilibrium => None,
                    PneCheck::Deviation { voter, ballot } => Some(Deviation {
                        voter: self.voter(voter),
                        ballot: self.ballot(ballot),
                    }),
                };
                let summary = match &deviation {
                    None => "equilibrium".to_string(),
                    Some(d) => format!(
                        "not an equilibrium: voter {} gains by switching to {}",
                        d.voter, d.ballot
                    ),
                };
                Response::ok(
                    ResultDocument {
                        is_pne: Some(check.is_equilibrium()),
                        deviation,
                        ballots: Some(self.ballots(&b)),
                        ..Default::default()
                    },
                    summary,
                )
            }
            Request::PneFind => match find_pne(p)? {
                Some(w) => Response::ok(
                    ResultDocument {
                        outcome: Some(self.outcome(w.outcome)),
                        ballots: Some(self.ballots(&w.ballots)),
                        ..Default::default()
                    },
                    format!(
                        "equilibrium with outcome {}: {}",
                        self.show_outcome(w.outcome),
                        self.ballots(&w.ballots).join(" ")
                    ),
                ),
                None => Response {
                    document: ResultDocument::default(),
                    summary: "no pure Nash equilibrium exists".to_string(),
                    exit_code: EXIT_NO_PNE,
                },
            },
            Request::PneEnum => {
                let outcomes = enumerate_pne_outcomes(p)?;
                let summary = format!(
                    "{} equilibrium outcome(s): {}",
                    outcomes.len(),
                    outcomes
                        .iter()
                        .map(|&o| self.show_outcome(o))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                Response::ok(
                    ResultDocument {
                        outcomes: Some(outcomes.into_iter().map(|o| self.outcome(o)).collect()),
                        ..Default::default()
                    },
                    summary,
                )
            }
            Request::PneBrute => {
                let found = brute_force_pne(p)?;
                let summary = format!("{} equilibrium ballot vector(s)", found.len());
                Response::ok(
                    ResultDocument {
                        equilibria: Some(found.iter().map(|w| self.ballots(&w.ballots)).collect()),
                        ..Default::default()
                    },
                    summary,
                )
            }
            Request::Spne { engine } => {
                let engine = engine.unwrap_or_else(|| Engine::select(p.m(), p.n(), &opts.bounds));
                self.sequential(engine, opts)?
            }
            Request::SpneOracle => self.sequential(Engine::Tree, opts)?,
            Request::TwoCand => {
                let order = self.doc.voting_order()?;
                let r = two_candidate_play(p, &order)?;
                self.sequential_response(&order, &r, "closed-form", None)
            }
            Request::Mandate { .. } | Request::Gen { .. } | Request::ReduceX3c => {
                unreachable!("handled without an election file")
            }
        })
    }

    fn sequential(&self, engine: Engine, opts: &RunOptions) -> Result<Response, Failure> {
        let order = self.doc.voting_order()?;
        let tie = TieBreak::ascending(self.p.m());
        let (r, states, label) = match engine {
            Engine::History => {
                let (r, tables) = spne_history_with(self.p, &order, &tie, &opts.bounds)?;
                (r, Some(tables.state_count() as u64), "history")
            }
            Engine::Counts => (
                spne_counts_with(self.p, &order, &tie, &opts.bounds)?,
                None,
                "counts",
            ),
            Engine::Tree => (
                tree_spne_with(self.p, &order, &tie, &opts.bounds)?,
                None,
                "tree",
            ),
        };
        Ok(self.sequential_response(&order, &r, label, states))
    }

    fn sequential_response(
        &self,
        order: &VotingOrder,
        r: &SpneResult,
        engine: &str,
        states: Option<u64>,
    ) -> Response {
        let summary = format!(
            "outcome {} with votes ({})",
            self.show_outcome(r.outcome),
            self.ballots(&r.votes).join(", ")
        );
        Response::ok(
            ResultDocument {
                engine: Some(engine.to_string()),
                outcome: Some(self.outcome(r.outcome)),
                votes: Some(self.rounds(order, &r.votes)),
                mandate: Some(r.mandate()),
                diagnostics: states.map(|s| Diagnostics {
                    states: Some(s),
                    elapsed_us: None,
                }),
                ..Default::default()
            },
            summary,
        )
    }
}

fn mandate(n_a: usize, n_b: usize, k: usize) -> Result<Response, CliError> {
    let sides = mandate_permutation(n_a, n_b, k)?;
    let p = two_candidate_profile(&sides);
    let r = two_candidate_play(&p, &VotingOrder::identity(sides.len()))?;
    let order: String = sides.iter().map(|s| s.as_char()).collect();
    let winners: Vec<String> = r
        .outcome
        .iter()
        .map(|c| if c == Side::A.candidate() { "A" } else { "B" }.to_string())
        .collect();
    let summary = format!(
        "order {order}: winner {} with {} vote(s)",
        winners.join(", "),
        r.mandate()
    );
    Ok(Response::ok(
        ResultDocument {
            outcome: Some(winners),
            mandate: Some(r.mandate()),
            order: Some(order),
            ..Default::default()
        },
        summary,
    ))
}

fn generate(n: usize, m: usize, seed: u64) -> Result<Response, CliError> {
    let names = candidate_names(m);
    let p = random_profile::<u128>(n, m, seed)?.with_candidate_names(names);
    Ok(Response::ok(
        ResultDocument {
            election: Some(ElectionDocument::from_profile(&p)),
            ..Default::default()
        },
        format!("random election: {n} voters, {m} candidates, seed {seed}"),
    ))
}

/// `A`, `B`, ... for up to 26 candidates, `c0`, `c1`, ... beyond.
fn candidate_names(m: usize) -> Vec<String> {
    (0..m)
        .map(|j| {
            if m <= 26 {
                ((b'A' + j as u8) as char).to_string()
            } else {
                format!("c{j}")
            }
        })
        .collect()
}

fn reduce(text: &str) -> Result<Response, CliError> {
    let x = parse_x3c(text)?;
    let instance = X3cInstance::from_sets(x.ground_size, &x.sets)?;
    let r = x3c_reduce::<u128>(&instance)?;
    let election = ElectionDocument::from_profile(&r.profile);
    let names = |range: std::ops::Range<usize>| -> Vec<String> {
        range.map(|j| election.candidates[j].clone()).collect()
    };
    let branch = match r.branch {
        ReductionBranch::Shortcut => "shortcut",
        ReductionBranch::Gadget => "gadget",
        ReductionBranch::Direct => "direct",
    };
    let summary = format!(
        "{branch} reduction: {} candidates, {} voters",
        r.profile.m(),
        r.profile.n()
    );
    Ok(Response::ok(
        ResultDocument {
            reduction: Some(ReductionSummary {
                branch: branch.to_string(),
                d_candidates: names(r.d_candidates.clone()),
                e_candidates: names(r.e_candidates.clone()),
                renumbering: r.renumbering.clone(),
                notes: r.notes.clone(),
            }),
            election: Some(election),
            ..Default::default()
        },
        summary,
    ))
}
