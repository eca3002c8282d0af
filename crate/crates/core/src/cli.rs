//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeds or the checked property holds,
//! 1 on a validation or property failure (witness on stderr), 2 on parse or
//! usage errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::embedder::embed;
use crate::error::Error;
use crate::format::{
    parse_graph, parse_orders, to_dot, write_graph, write_orders, write_triangulation,
    write_triples, GraphJson, OrdersJson,
};
use crate::oracle::{random_stacked_triangulation, search_representation, DEFAULT_CAP};
use crate::orders::StandardRepresentation;
use crate::realizer::{realize_with, RealizeOptions};
use crate::sigma::{fan_of_apex, sigma2, sigma3, FanReport, PartStatus};
use crate::triangulation::Triangulation;
use crate::vertex::{Labels, VertexId};

#[derive(Debug, Parser)]
#[command(
    name = "schnyder",
    version,
    about = "Planar triangulations and three linear orders"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate an orders file and report the neighbourhood of a1.
    CheckRep { file: PathBuf },
    /// Print the graph of an orders file.
    Sigma2 { file: PathBuf },
    /// Print the bounded faces of an orders file.
    Sigma3 { file: PathBuf },
    /// Build an orders file from a triangulation.
    Realize {
        file: PathBuf,
        /// Check that the result reproduces the input graph.
        #[arg(long)]
        verify: bool,
    },
    /// Build an embedded triangulation from an orders file.
    Embed { file: PathBuf },
    /// Realize a triangulation and compare the graph of the result.
    Roundtrip { file: PathBuf },
    /// Brute-force tools for small instances.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Search all standard representations for one whose graph is the input.
    Search {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Generate a random stacked triangulation.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    /// Exit 1.
    Property(String),
    /// Exit 2.
    Usage(String),
}

impl Failure {
    fn from_error(e: Error, labels: &Labels) -> Self {
        let msg = relabel(&e.to_string(), labels);
        match e {
            Error::Parse(_) | Error::CapExceeded { .. } => Failure::Usage(msg),
            _ => Failure::Property(msg),
        }
    }
}

/// Replaces `#N` vertex renderings in `msg` with their labels.
fn relabel(msg: &str, labels: &Labels) -> String {
    let mut out = String::with_capacity(msg.len());
    let mut rest = msg;
    while let Some(at) = rest.find('#') {
        out.push_str(&rest[..at]);
        let digits: String = rest[at + 1..]
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        match digits.parse::<usize>() {
            Ok(i) if i < labels.len() => out.push_str(&labels.name(VertexId::from(i))),
            _ => {
                out.push('#');
                out.push_str(&digits);
            }
        }
        rest = &rest[at + 1 + digits.len()..];
    }
    out.push_str(rest);
    out
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut out = String::new();
    let result = dispatch(&cli, &mut out);
    let _ = stdout.write_all(out.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Property(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load_rep(path: &Path) -> Result<(Labels, StandardRepresentation), Failure> {
    let doc = parse_orders(&read_input(path)?).map_err(|e| Failure::Usage(e.to_string()))?;
    let labels = doc.labels.clone();
    doc.into_representation()
        .map_err(|e| Failure::from_error(e, &labels))
}

fn load_triangulation(path: &Path) -> Result<(Labels, Triangulation), Failure> {
    let doc = parse_graph(&read_input(path)?).map_err(|e| Failure::Usage(e.to_string()))?;
    let t = doc
        .to_triangulation()
        .map_err(|e| Failure::from_error(e, &doc.labels))?;
    Ok((doc.labels, t))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn emit_rep(
    format: Format,
    rep: &StandardRepresentation,
    labels: &Labels,
) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(write_orders(rep.orders(), labels)),
        Format::Json => Ok(json(&OrdersJson::new(rep.orders(), labels))),
        Format::Dot => Err(Failure::Usage("orders have no DOT rendering".into())),
    }
}

fn emit_triangulation(format: Format, t: &Triangulation, labels: &Labels) -> String {
    match format {
        Format::Text => write_triangulation(t, labels),
        Format::Json => json(&GraphJson::from_triangulation(t, labels)),
        Format::Dot => to_dot(t.graph(), Some(t.outer()), labels),
    }
}

#[derive(Serialize)]
struct PartJson {
    part: usize,
    status: String,
    detail: Option<String>,
}

#[derive(Serialize)]
struct FanJson {
    apexes: [String; 3],
    fan: Vec<String>,
    b: String,
    parts: Vec<PartJson>,
}

fn part_lines(report: &FanReport, labels: &Labels) -> Vec<PartJson> {
    report
        .parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let (status, detail) = match p {
                PartStatus::Holds => ("holds", None),
                PartStatus::Vacuous => ("vacuous", None),
                PartStatus::Fails(v) => ("fails", Some(relabel(&format!("{v:?}"), labels))),
            };
            PartJson {
                part: i + 1,
                status: status.into(),
                detail,
            }
        })
        .collect()
}

fn names(vs: &[VertexId], labels: &Labels) -> Vec<String> {
    vs.iter().map(|&v| labels.name(v)).collect()
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::CheckRep { file } => {
            let (labels, rep) = load_rep(file)?;
            let g = sigma2(&rep);
            let report = fan_of_apex(&rep, &g).map_err(|e| Failure::from_error(e, &labels))?;
            let parts = part_lines(&report, &labels);
            match format {
                Format::Json => out.push_str(&json(&FanJson {
                    apexes: rep.apexes().map(|a| labels.name(a)),
                    fan: names(&report.fan, &labels),
                    b: labels.name(report.b),
                    parts,
                })),
                Format::Text => {
                    let a = names(&rep.apexes(), &labels);
                    out.push_str(&format!(
                        "standard representation, apexes {}\n",
                        a.join(" ")
                    ));
                    out.push_str(&format!(
                        "fan of {}: {}\n",
                        a[0],
                        names(&report.fan, &labels).join(" ")
                    ));
                    out.push_str(&format!("b = {}\n", labels.name(report.b)));
                    for p in &parts {
                        match &p.detail {
                            Some(d) => {
                                out.push_str(&format!("part {}: {} ({d})\n", p.part, p.status))
                            }
                            None => out.push_str(&format!("part {}: {}\n", p.part, p.status)),
                        }
                    }
                }
                Format::Dot => out.push_str(&to_dot(&g, Some(rep.apexes()), &labels)),
            }
            match report.first_failure() {
                Some((part, v)) => Err(Failure::Property(relabel(
                    &format!("part {part} fails: {v:?}"),
                    &labels,
                ))),
                None => Ok(()),
            }
        }
        Command::Sigma2 { file } => {
            let (labels, rep) = load_rep(file)?;
            let g = sigma2(&rep);
            let outer = Some(rep.apexes());
            out.push_str(&match format {
                Format::Text => write_graph(&g, outer, &labels),
                Format::Json => json(&GraphJson::from_graph(&g, outer, &labels)),
                Format::Dot => to_dot(&g, outer, &labels),
            });
            Ok(())
        }
        Command::Sigma3 { file } => {
            let (labels, rep) = load_rep(file)?;
            let triples = sigma3(&rep);
            match format {
                Format::Text => out.push_str(&write_triples(&triples, &labels)),
                Format::Json => {
                    let list: Vec<Vec<String>> =
                        triples.iter().map(|t| names(t, &labels)).collect();
                    out.push_str(&json(&serde_json::json!({ "triples": list })));
                }
                Format::Dot => {
                    return Err(Failure::Usage("face sets have no DOT rendering".into()))
                }
            }
            Ok(())
        }
        Command::Realize { file, verify } => {
            let (labels, t) = load_triangulation(file)?;
            let rep = realize_with(&t, RealizeOptions { verify: *verify })
                .map_err(|e| Failure::from_error(e, &labels))?;
            out.push_str(&emit_rep(format, &rep, &labels)?);
            Ok(())
        }
        Command::Embed { file } => {
            let (labels, rep) = load_rep(file)?;
            let t = embed(&rep).map_err(|e| Failure::from_error(e, &labels))?;
            out.push_str(&emit_triangulation(format, &t, &labels));
            Ok(())
        }
        Command::Roundtrip { file } => {
            let (labels, t) = load_triangulation(file)?;
            let rep = realize_with(&t, RealizeOptions::default())
                .map_err(|e| Failure::from_error(e, &labels))?;
            let g = sigma2(&rep);
            if g == *t.graph() {
                out.push_str(&format!("graphs equal, {} edges\n", g.edge_count()));
                Ok(())
            } else {
                let missing = t
                    .graph()
                    .edges()
                    .into_iter()
                    .find(|&(u, v)| !g.has_edge(u, v));
                let extra = g
                    .edges()
                    .into_iter()
                    .find(|&(u, v)| !t.graph().has_edge(u, v));
                let (kind, (u, v)) = match (missing, extra) {
                    (Some(e), _) => ("missing", e),
                    (None, Some(e)) => ("extra", e),
                    (None, None) => unreachable!("graphs differ"),
                };
                Err(Failure::Property(format!(
                    "graphs differ, {kind} edge {} {}",
                    labels.name(u),
                    labels.name(v)
                )))
            }
        }
        Command::Oracle { command } => match command {
            OracleCommand::Search { file, cap } => {
                let doc =
                    parse_graph(&read_input(file)?).map_err(|e| Failure::Usage(e.to_string()))?;
                let outer = doc
                    .outer
                    .ok_or_else(|| Failure::Usage("line 0: missing `outer` line".into()))?;
                match search_representation(&doc.graph, outer, *cap)
                    .map_err(|e| Failure::from_error(e, &doc.labels))?
                {
                    Some(rep) => {
                        out.push_str(&emit_rep(format, &rep, &doc.labels)?);
                        Ok(())
                    }
                    None => Err(Failure::Property(
                        "no standard representation has this graph".into(),
                    )),
                }
            }
            OracleCommand::Gen { n, seed } => {
                let t = random_stacked_triangulation(*n, *seed).map_err(|e| match e {
                    Error::Triangulation(_) => Failure::Usage(e.to_string()),
                    e => Failure::Property(e.to_string()),
                })?;
                out.push_str(&emit_triangulation(format, &t, &Labels::numeric(*n)));
                Ok(())
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabel_replaces_known_ids_only() {
        let mut labels = Labels::new();
        labels.intern("x");
        labels.intern("y");
        assert_eq!(relabel("witness (#1, #0)", &labels), "witness (y, x)");
        assert_eq!(relabel("#7 and # and #", &labels), "#7 and # and #");
    }

    #[test]
    fn usage_errors_exit_2() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["schnyder", "sigma2"], &mut o, &mut e), 2);
        assert_eq!(run(["schnyder", "frobnicate"], &mut o, &mut e), 2);
        assert_eq!(
            run(["schnyder", "oracle", "gen", "--n", "3"], &mut o, &mut e),
            2
        );
    }

    #[test]
    fn help_exits_0() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["schnyder", "--help"], &mut o, &mut e), 0);
        assert!(String::from_utf8(o).unwrap().contains("roundtrip"));
    }

    #[test]
    fn gen_output_is_a_graph_file() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(
            run(
                ["schnyder", "oracle", "gen", "--n", "7", "--seed", "3"],
                &mut o,
                &mut e
            ),
            0
        );
        let text = String::from_utf8(o).unwrap();
        let t = parse_graph(&text).unwrap().to_triangulation().unwrap();
        assert_eq!(t.edge_count(), 15);
    }
}
