use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::FrameworkDocument;
use crate::af::{is_valid_name, ArgumentId, ArgumentationFramework};
use crate::causality::CausalityGraph;
use crate::credal::{CredalProfile, CredalSet};
use crate::{Error, Result};

#[derive(Debug)]
enum Statement {
    Arg(ArgumentId),
    Att(ArgumentId, ArgumentId),
    Cau(ArgumentId, ArgumentId),
    Agents(usize),
    Opinion(usize, ArgumentId, f64),
    Name(String),
    Description(String),
}

/// Splits the text into `(line, statement text)` pairs. A statement ends at a
/// `.` outside parentheses and string literals; `%` starts a comment.
fn split_statements(text: &str) -> Result<Vec<(usize, String)>> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start = 0;
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;

    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        for ch in line.chars() {
            if in_string {
                current.push(ch);
                if escaped {
                    escaped = false;
                } else if ch == '\\' {
                    escaped = true;
                } else if ch == '"' {
                    in_string = false;
                }
                continue;
            }
            match ch {
                '%' => break,
                '.' if depth == 0 => {
                    if current.trim().is_empty() {
                        return Err(Error::parse(lineno, "empty statement"));
                    }
                    out.push((start, std::mem::take(&mut current)));
                }
                _ => {
                    if current.trim().is_empty() && !ch.is_whitespace() {
                        start = lineno;
                    }
                    match ch {
                        '(' => depth += 1,
                        ')' => {
                            depth = depth
                                .checked_sub(1)
                                .ok_or_else(|| Error::parse(lineno, "unbalanced ')'"))?
                        }
                        '"' => in_string = true,
                        _ => {}
                    }
                    current.push(ch);
                }
            }
        }
        if in_string {
            return Err(Error::parse(lineno, "unterminated string literal"));
        }
        current.push(' ');
    }
    if !current.trim().is_empty() {
        return Err(Error::parse(
            start,
            format!(
                "statement {:?} is missing its terminating '.'",
                current.trim()
            ),
        ));
    }
    Ok(out)
}

fn parse_statement(line: usize, text: &str) -> Result<Statement> {
    let text = text.trim();
    let err = |msg: String| Error::parse(line, msg);
    let open = text
        .find('(')
        .ok_or_else(|| err(format!("expected predicate(...) but found {text:?}")))?;
    let predicate = text[..open].trim();
    let inner = text[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| err(format!("expected ')' at the end of {text:?}")))?
        .trim();

    if predicate == "name" || predicate == "description" {
        let value = parse_string(inner).map_err(err)?;
        return Ok(if predicate == "name" {
            Statement::Name(value)
        } else {
            Statement::Description(value)
        });
    }

    let args: Vec<&str> = inner.split(',').map(str::trim).collect();
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(err(format!(
                "{predicate} expects {n} argument(s), found {}",
                args.len()
            )))
        }
    };
    let ident = |s: &str| -> Result<ArgumentId> {
        if is_valid_name(s) {
            ArgumentId::new(s)
        } else {
            Err(err(format!("invalid argument name {s:?}")))
        }
    };

    match predicate {
        "arg" => {
            arity(1)?;
            Ok(Statement::Arg(ident(args[0])?))
        }
        "att" => {
            arity(2)?;
            Ok(Statement::Att(ident(args[0])?, ident(args[1])?))
        }
        "cau" => {
            arity(2)?;
            Ok(Statement::Cau(ident(args[0])?, ident(args[1])?))
        }
        "agents" => {
            arity(1)?;
            let m: usize = args[0]
                .parse()
                .map_err(|_| err(format!("agent count {:?} is not a number", args[0])))?;
            if m == 0 {
                return Err(err("agent count must be at least 1".into()));
            }
            Ok(Statement::Agents(m))
        }
        "p" => {
            arity(3)?;
            let agent: usize = args[0]
                .parse()
                .map_err(|_| err(format!("agent index {:?} is not a number", args[0])))?;
            let value: f64 = args[2]
                .parse()
                .map_err(|_| err(format!("opinion {:?} is not a decimal number", args[2])))?;
            if !(0.0..=1.0).contains(&value) {
                return Err(err(format!("opinion {} is outside [0, 1]", args[2])));
            }
            Ok(Statement::Opinion(agent, ident(args[1])?, value))
        }
        other => Err(err(format!("unknown predicate {other:?}"))),
    }
}

fn parse_string(s: &str) -> std::result::Result<String, String> {
    let body = s
        .strip_prefix('"')
        .and_then(|b| b.strip_suffix('"'))
        .ok_or_else(|| format!("expected a quoted string, found {s:?}"))?;
    let mut out = String::new();
    let mut chars = body.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => match chars.next() {
                Some('n') => out.push('\n'),
                Some(c @ ('\\' | '"')) => out.push(c),
                other => return Err(format!("bad escape sequence \\{}", other.unwrap_or(' '))),
            },
            '"' => return Err("unescaped '\"' inside string".into()),
            c => out.push(c),
        }
    }
    Ok(out)
}

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Parses a `.caf` document. Errors carry the 1-based line of the offending
/// statement.
pub fn parse_caf(text: &str) -> Result<FrameworkDocument> {
    let statements = split_statements(text)?
        .into_iter()
        .map(|(line, s)| Ok((line, parse_statement(line, &s)?)))
        .collect::<Result<Vec<_>>>()?;

    let mut name = None;
    let mut description = None;
    let mut args: BTreeMap<ArgumentId, usize> = BTreeMap::new();
    let mut agents: Option<(usize, usize)> = None;
    for (line, st) in &statements {
        match st {
            Statement::Arg(a) => {
                if args.insert(a.clone(), *line).is_some() {
                    return Err(Error::parse(*line, format!("duplicate argument {a}")));
                }
            }
            Statement::Agents(m) => {
                if agents.replace((*m, *line)).is_some() {
                    return Err(Error::parse(*line, "agents(M) declared more than once"));
                }
            }
            Statement::Name(s) => name = Some(s.clone()),
            Statement::Description(s) => description = Some(s.clone()),
            _ => {}
        }
    }
    let known = |line: usize, a: &ArgumentId| -> Result<()> {
        if args.contains_key(a) {
            Ok(())
        } else {
            Err(Error::parse(line, format!("undeclared argument {a}")))
        }
    };

    let mut attacks = Vec::new();
    let mut causal = Vec::new();
    let mut opinions: BTreeMap<(ArgumentId, usize), f64> = BTreeMap::new();
    for (line, st) in &statements {
        let line = *line;
        match st {
            Statement::Att(a, b) => {
                known(line, a)?;
                known(line, b)?;
                attacks.push((a.clone(), b.clone()));
            }
            Statement::Cau(a, b) => {
                known(line, a)?;
                known(line, b)?;
                causal.push((line, a.clone(), b.clone()));
            }
            Statement::Opinion(j, a, v) => {
                let (m, _) = agents.ok_or_else(|| {
                    Error::parse(line, "opinions require an agents(M) declaration")
                })?;
                if *j == 0 || *j > m {
                    return Err(Error::parse(
                        line,
                        format!("agent index {j} is outside 1..={m}"),
                    ));
                }
                known(line, a)?;
                if opinions.insert((a.clone(), *j), *v).is_some() {
                    return Err(Error::parse(
                        line,
                        format!("duplicate opinion of agent {j} on {a}"),
                    ));
                }
            }
            _ => {}
        }
    }

    let framework = ArgumentationFramework::new(args.keys().cloned(), attacks)
        .map_err(|e| Error::parse(1, e.to_string()))?;
    let agent_count = agents.map_or(1, |(m, _)| m);

    let profile = if opinions.is_empty() {
        CredalProfile::maximal(&framework, agent_count)
    } else {
        let mut assignment = BTreeMap::new();
        for (a, &line) in &args {
            let values = (1..=agent_count)
                .map(|j| {
                    opinions.get(&(a.clone(), j)).copied().ok_or_else(|| {
                        Error::parse(line, format!("argument {a} has no opinion from agent {j}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            assignment.insert(
                a.clone(),
                CredalSet::new(values).map_err(|e| Error::parse(line, e.to_string()))?,
            );
        }
        CredalProfile::new(&framework, agent_count, assignment)
    }
    .map_err(|e| Error::parse(1, e.to_string()))?;

    let causality = CausalityGraph::new(
        &framework,
        causal.iter().map(|(_, a, b)| (a.clone(), b.clone())),
    )
    .map_err(|e| {
        let line = match &e {
            Error::CausalAttackOverlap(a, b) => causal
                .iter()
                .find(|(_, x, y)| x == a && y == b)
                .map_or(1, |(l, _, _)| *l),
            Error::CausalSelfEdge(a) => causal
                .iter()
                .find(|(_, x, y)| x == a && y == a)
                .map_or(1, |(l, _, _)| *l),
            Error::CausalCycle(cycle) => causal
                .iter()
                .filter(|(_, x, y)| cycle.contains(x) && cycle.contains(y))
                .map(|(l, _, _)| *l)
                .max()
                .unwrap_or(1),
            _ => 1,
        };
        Error::parse(line, e.to_string())
    })?;

    Ok(FrameworkDocument {
        name,
        description,
        framework,
        profile,
        causality,
    })
}

/// Canonical `.caf` rendering: metadata, sorted arguments, attacks, causal
/// edges, the agent count, then opinions ordered by (agent, argument).
pub fn emit_caf(doc: &FrameworkDocument) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        let _ = writeln!(out, "name({}).", quote(name));
    }
    if let Some(description) = &doc.description {
        let _ = writeln!(out, "description({}).", quote(description));
    }
    for a in doc.framework.arguments() {
        let _ = writeln!(out, "arg({a}).");
    }
    for (a, b) in doc.framework.attacks() {
        let _ = writeln!(out, "att({a},{b}).");
    }
    for (a, b) in doc.causality.edges() {
        let _ = writeln!(out, "cau({a},{b}).");
    }
    let m = doc.profile.agent_count();
    let _ = writeln!(out, "agents({m}).");
    for j in 0..m {
        for (a, k) in doc.profile.iter() {
            let _ = writeln!(out, "p({},{a},{}).", j + 1, k.opinion(j));
        }
    }
    out
}
