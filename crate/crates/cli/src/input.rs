//! Reading graphs from files, stdin, fixtures and a few built-in families.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use girthcolor::fixtures;
use girthcolor::graph::{decode_graph6, encode_graph6, parse_adjacency_list};
use girthcolor::lcf::{parse_lcf_rows, parse_lcf_table, LcfScheme};
use girthcolor::Graph;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    G6,
    Adj,
    Lcf,
}

#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// SHA-256 of the input bytes (of the graph6 string for built-ins).
    pub hash: String,
    pub source: String,
    pub scheme: Option<LcfScheme>,
}

/// Failure to read an input, kept apart from parse failures for exit codes.
#[derive(Debug)]
pub struct InputMissing(pub String);

impl std::fmt::Display for InputMissing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cannot read input {}", self.0)
    }
}

impl std::error::Error for InputMissing {}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Resolves `spec` as `-` (stdin), an existing path, `fixture:NAME`, or one
/// of `cycle:N`, `path:N`, `complete:N`, `petersen`, `grotzsch`.
pub fn load(spec: &str, format: InputFormat, lcf_s: Option<usize>) -> Result<LoadedGraph> {
    if spec == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|_| InputMissing("stdin".into()))?;
        return from_text(&text, format, None, lcf_s, "stdin".into());
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|_| InputMissing(spec.into()))?;
        return from_text(&text, format, path.extension().and_then(|e| e.to_str()), lcf_s, spec.into());
    }
    if let Some(name) = spec.strip_prefix("fixture:") {
        let fixture = fixtures::fixture(name)?;
        let text = fixture.text()?;
        let ext = Path::new(&fixture.file).extension().and_then(|e| e.to_str());
        return from_text(text, format, ext, lcf_s, spec.into());
    }
    let graph = builtin(spec).ok_or_else(|| InputMissing(spec.into()))??;
    Ok(LoadedGraph { hash: sha256_hex(encode_graph6(&graph).as_bytes()), graph, source: spec.into(), scheme: None })
}

fn builtin(spec: &str) -> Option<Result<Graph>> {
    let (name, arg) = spec.split_once(':').map_or((spec, None), |(n, a)| (n, Some(a)));
    let size = || -> Result<usize> {
        arg.ok_or_else(|| anyhow!("{name} needs an order, as in {name}:5"))?
            .parse()
            .with_context(|| format!("bad order in {spec}"))
    };
    let g = match name {
        "cycle" => {
            size().and_then(
                |n| if n < 3 { Err(anyhow!("a cycle needs at least 3 vertices")) } else { Ok(Graph::cycle(n)) },
            )
        }
        "path" => size().map(Graph::path),
        "complete" => size().map(Graph::complete),
        "petersen" if arg.is_none() => Ok(Graph::petersen()),
        "grotzsch" if arg.is_none() => Ok(Graph::grotzsch()),
        _ => return None,
    };
    Some(g)
}

fn detect(text: &str, ext: Option<&str>) -> InputFormat {
    match ext {
        Some("g6" | "graph6") => return InputFormat::G6,
        Some("adj") => return InputFormat::Adj,
        Some("lcf") => return InputFormat::Lcf,
        _ => {}
    }
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.starts_with("LCF(") {
        InputFormat::Lcf
    } else if first.contains(':') {
        InputFormat::Adj
    } else {
        InputFormat::G6
    }
}

fn from_text(
    text: &str,
    format: InputFormat,
    ext: Option<&str>,
    lcf_s: Option<usize>,
    source: String,
) -> Result<LoadedGraph> {
    let hash = sha256_hex(text.as_bytes());
    let format = if format == InputFormat::Auto { detect(text, ext) } else { format };
    let (graph, scheme) = match format {
        InputFormat::G6 => {
            let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
            let [line] = lines[..] else {
                bail!("{source}: expected exactly one graph6 line, found {}", lines.len());
            };
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            (decode_graph6(line).with_context(|| format!("{source}: invalid graph6"))?, None)
        }
        InputFormat::Adj => {
            (parse_adjacency_list(text, None).with_context(|| format!("{source}: invalid adjacency list"))?, None)
        }
        InputFormat::Lcf => {
            let scheme = if text.trim_start().starts_with("LCF(") {
                parse_lcf_table(text)
            } else {
                let s = lcf_s.ok_or_else(|| anyhow!("{source}: LCF table without an LCF(r,s) header needs --lcf-s"))?;
                parse_lcf_rows(text, s)
            }
            .with_context(|| format!("{source}: invalid LCF table"))?;
            (scheme.realize(), Some(scheme))
        }
        InputFormat::Auto => unreachable!("format resolved above"),
    };
    Ok(LoadedGraph { graph, hash, source, scheme })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(detect("LCF(2,3)\n0: 1\n", None), InputFormat::Lcf);
        assert_eq!(detect("0: 1 2\n", None), InputFormat::Adj);
        assert_eq!(detect("Dhc\n", None), InputFormat::G6);
        assert_eq!(detect("0: 1 2\n", Some("g6")), InputFormat::G6);
    }

    #[test]
    fn builtins() {
        assert_eq!(load("cycle:5", InputFormat::Auto, None).unwrap().graph, Graph::cycle(5));
        assert!(load("cycle:2", InputFormat::Auto, None).is_err());
        assert!(load("no-such-thing", InputFormat::Auto, None).unwrap_err().is::<InputMissing>());
    }
}
