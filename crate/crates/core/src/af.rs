//! Abstract argumentation frameworks and extension enumeration.
//!
//! Enumeration walks the subset lattice depth-first over the sorted argument
//! list, keeping the current set as a `u64` mask. A branch is cut as soon as
//! the chosen arguments stop being conflict-free, so no superset of a
//! conflicting set is ever visited. Each surviving conflict-free set is then
//! tested against the requested semantics.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Default upper bound on the number of arguments accepted by [`enumerate`].
pub const DEFAULT_ARGUMENT_CAP: usize = 25;

/// Hard limit imposed by the 64-bit subset masks.
const MASK_BITS: usize = 64;

/// Name of an argument: a non-empty token of ASCII letters, digits and `_`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_valid_name(&name) {
            Ok(Self(name))
        } else {
            Err(Error::InvalidArgumentName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ArgumentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

impl Serialize for ArgumentId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// The six semantics for which extensions can be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    ConflictFree,
    Admissible,
    Complete,
    Preferred,
    Grounded,
    Stable,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::ConflictFree,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Grounded,
        Semantics::Stable,
    ];

    /// Two-letter code (`cf`, `ad`, `co`, `pr`, `gr`, `st`).
    pub fn code(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "cf",
            Semantics::Admissible => "ad",
            Semantics::Complete => "co",
            Semantics::Preferred => "pr",
            Semantics::Grounded => "gr",
            Semantics::Stable => "st",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "conflict-free",
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Preferred => "preferred",
            Semantics::Grounded => "grounded",
            Semantics::Stable => "stable",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.code() == lower || sem.name() == lower)
            .ok_or_else(|| {
                format!("unknown semantics {s:?} (expected one of cf, ad, co, pr, gr, st)")
            })
    }
}

impl Serialize for Semantics {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// A finite set of arguments together with an attack relation.
///
/// Arguments are kept sorted by name; indices into that order are used
/// internally for the attack adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ArgumentationFramework {
    arguments: Vec<ArgumentId>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl ArgumentationFramework {
    pub fn new<A, R>(arguments: A, attacks: R) -> Result<Self>
    where
        A: IntoIterator<Item = ArgumentId>,
        R: IntoIterator<Item = (ArgumentId, ArgumentId)>,
    {
        let mut args: Vec<ArgumentId> = arguments.into_iter().collect();
        args.sort();
        if let Some(pair) = args.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArgument(pair[0].clone()));
        }

        let mut af = Self {
            attackers: vec![Vec::new(); args.len()],
            targets: vec![Vec::new(); args.len()],
            arguments: args,
            attacks: BTreeSet::new(),
        };
        for (from, to) in attacks {
            let i = af.require(&from)?;
            let j = af.require(&to)?;
            if af.attacks.insert((i, j)) {
                af.targets[i].push(j);
                af.attackers[j].push(i);
            }
        }
        for list in af.attackers.iter_mut().chain(af.targets.iter_mut()) {
            list.sort_unstable();
        }
        Ok(af)
    }

    /// Convenience constructor from string names, used heavily in tests.
    pub fn from_names(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let args = arguments
            .iter()
            .map(|a| ArgumentId::new(*a))
            .collect::<Result<Vec<_>>>()?;
        let atts = attacks
            .iter()
            .map(|(a, b)| Ok((ArgumentId::new(*a)?, ArgumentId::new(*b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(args, atts)
    }

    pub fn arguments(&self) -> &[ArgumentId] {
        &self.arguments
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn contains(&self, id: &ArgumentId) -> bool {
        self.index_of(id).is_some()
    }

    pub fn index_of(&self, id: &ArgumentId) -> Option<usize> {
        self.arguments.binary_search(id).ok()
    }

    pub(crate) fn require(&self, id: &ArgumentId) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::UnknownArgument(id.clone()))
    }

    /// Attack pairs in canonical (attacker, target) order.
    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.attacks
            .iter()
            .map(|&(i, j)| (&self.arguments[i], &self.arguments[j]))
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_between(&self, attacker: &ArgumentId, target: &ArgumentId) -> bool {
        match (self.index_of(attacker), self.index_of(target)) {
            (Some(i), Some(j)) => self.attacks.contains(&(i, j)),
            _ => false,
        }
    }

    pub fn attackers_of(&self, id: &ArgumentId) -> Result<Vec<&ArgumentId>> {
        let i = self.require(id)?;
        Ok(self.attackers[i]
            .iter()
            .map(|&k| &self.arguments[k])
            .collect())
    }

    fn indices(&self, set: &BTreeSet<ArgumentId>) -> Result<Vec<usize>> {
        set.iter().map(|id| self.require(id)).collect()
    }

    fn ids(&self, indices: impl IntoIterator<Item = usize>) -> BTreeSet<ArgumentId> {
        indices
            .into_iter()
            .map(|i| self.arguments[i].clone())
            .collect()
    }
}

/// A set of arguments accepted together under some semantics.
///
/// Construction checks that the members belong to the framework and are
/// conflict-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Extension {
    members: BTreeSet<ArgumentId>,
    semantics: Semantics,
}

impl Extension {
    pub fn new(
        members: BTreeSet<ArgumentId>,
        semantics: Semantics,
        af: &ArgumentationFramework,
    ) -> Result<Self> {
        if !is_conflict_free(&members, af)? {
            return Err(Error::NotConflictFree(members.into_iter().collect()));
        }
        Ok(Self { members, semantics })
    }

    pub fn members(&self) -> &BTreeSet<ArgumentId> {
        &self.members
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: &ArgumentId) -> bool {
        self.members.contains(id)
    }

    /// Order by cardinality, then lexicographically by sorted member list.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        canonical_set_cmp(&self.members, &other.members)
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_set(&self.members))
    }
}

pub(crate) fn canonical_set_cmp(a: &BTreeSet<ArgumentId>, b: &BTreeSet<ArgumentId>) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter()))
}

/// `{A,B,C}` rendering used in text output.
pub fn format_set<'a>(members: impl IntoIterator<Item = &'a ArgumentId>) -> String {
    let names: Vec<&str> = members.into_iter().map(ArgumentId::as_str).collect();
    format!("{{{}}}", names.join(","))
}

/// True iff no attack has both endpoints in `set` (self-attacks included).
pub fn is_conflict_free(set: &BTreeSet<ArgumentId>, af: &ArgumentationFramework) -> Result<bool> {
    let idx = af.indices(set)?;
    Ok(idx
        .iter()
        .all(|&i| af.targets[i].iter().all(|j| idx.binary_search(j).is_err())))
}

/// True iff every attacker of `argument` is attacked by some member of `set`.
pub fn defends(
    set: &BTreeSet<ArgumentId>,
    argument: &ArgumentId,
    af: &ArgumentationFramework,
) -> Result<bool> {
    let idx = af.indices(set)?;
    let a = af.require(argument)?;
    let mut attacked = vec![false; af.len()];
    for &i in &idx {
        for &j in &af.targets[i] {
            attacked[j] = true;
        }
    }
    Ok(af.attackers[a].iter().all(|&b| attacked[b]))
}

/// Least fixpoint of the characteristic function, iterated from the empty set.
pub fn grounded_extension(af: &ArgumentationFramework) -> Extension {
    let n = af.len();
    let mut inside = vec![false; n];
    loop {
        let mut attacked = vec![false; n];
        for i in (0..n).filter(|&i| inside[i]) {
            for &j in &af.targets[i] {
                attacked[j] = true;
            }
        }
        let next: Vec<bool> = (0..n)
            .map(|a| af.attackers[a].iter().all(|&b| attacked[b]))
            .collect();
        if next == inside {
            break;
        }
        inside = next;
    }
    Extension {
        members: af.ids((0..n).filter(|&i| inside[i])),
        semantics: Semantics::Grounded,
    }
}

/// All extensions under `semantics`, with the default argument cap.
pub fn enumerate(af: &ArgumentationFramework, semantics: Semantics) -> Result<Vec<Extension>> {
    enumerate_with_cap(af, semantics, DEFAULT_ARGUMENT_CAP)
}

/// All extensions under `semantics`, deduplicated and in canonical order.
///
/// Grounded is computed by fixpoint and ignores the cap; every other
/// semantics refuses frameworks with more than `cap` arguments (and never
/// more than 64).
pub fn enumerate_with_cap(
    af: &ArgumentationFramework,
    semantics: Semantics,
    cap: usize,
) -> Result<Vec<Extension>> {
    if semantics == Semantics::Grounded {
        return Ok(vec![grounded_extension(af)]);
    }
    let limit = cap.min(MASK_BITS);
    if af.len() > limit {
        return Err(Error::CapExceeded {
            count: af.len(),
            cap: limit,
        });
    }

    let masks = MaskFramework::new(af);
    let mut found = Vec::new();
    masks.search(0, 0, &mut |set| {
        if masks.accepts(set, semantics) {
            found.push(set);
        }
    });
    if semantics == Semantics::Preferred {
        let complete = found;
        found = complete
            .iter()
            .copied()
            .filter(|&s| !complete.iter().any(|&t| t != s && t & s == s))
            .collect();
    }

    let mut extensions: Vec<Extension> = found
        .into_iter()
        .map(|mask| Extension {
            members: af.ids((0..af.len()).filter(|&i| mask >> i & 1 == 1)),
            semantics,
        })
        .collect();
    extensions.sort_by(Extension::canonical_cmp);
    extensions.dedup();
    Ok(extensions)
}

/// Bitmask view of a framework with at most 64 arguments.
struct MaskFramework {
    n: usize,
    attackers: Vec<u64>,
    targets: Vec<u64>,
}

impl MaskFramework {
    fn new(af: &ArgumentationFramework) -> Self {
        let to_mask = |list: &Vec<usize>| list.iter().fold(0u64, |m, &k| m | 1 << k);
        Self {
            n: af.len(),
            attackers: af.attackers.iter().map(to_mask).collect(),
            targets: af.targets.iter().map(to_mask).collect(),
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Visits every conflict-free set that extends `set` with arguments
    /// from index `next` onwards.
    fn search(&self, next: usize, set: u64, visit: &mut impl FnMut(u64)) {
        if next == self.n {
            visit(set);
            return;
        }
        self.search(next + 1, set, visit);
        let with = set | 1 << next;
        if self.targets[next] & with == 0 && self.attackers[next] & set == 0 {
            self.search(next + 1, with, visit);
        }
    }

    fn attacked_by(&self, set: u64) -> u64 {
        (0..self.n)
            .filter(|&i| set >> i & 1 == 1)
            .fold(0, |m, i| m | self.targets[i])
    }

    fn defended_by(&self, set: u64) -> u64 {
        let attacked = self.attacked_by(set);
        (0..self.n)
            .filter(|&a| self.attackers[a] & !attacked == 0)
            .fold(0, |m, a| m | 1 << a)
    }

    /// Semantics test for a set already known to be conflict-free.
    /// Preferred is filtered to complete here and maximised by the caller.
    fn accepts(&self, set: u64, semantics: Semantics) -> bool {
        match semantics {
            Semantics::ConflictFree => true,
            Semantics::Admissible => self.defended_by(set) & set == set,
            Semantics::Complete | Semantics::Preferred | Semantics::Grounded => {
                self.defended_by(set) == set
            }
            Semantics::Stable => (set | self.attacked_by(set)) == self.full(),
        }
    }
}
