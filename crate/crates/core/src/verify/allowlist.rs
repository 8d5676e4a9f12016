use std::collections::BTreeSet;

use super::VerifyError;
use crate::claims;

/// Claim ids whose refutation is known and should not fail a run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Allowlist(BTreeSet<String>);

/// The checked-in list of known errata.
pub const KNOWN_ERRATA: &str = include_str!("../../data/known_errata.txt");

impl Allowlist {
    /// One claim id per line; `#` starts a comment. Unknown ids are rejected.
    pub fn parse(text: &str) -> Result<Self, VerifyError> {
        let mut ids = BTreeSet::new();
        for line in text.lines() {
            let id = line.split('#').next().unwrap_or("").trim();
            if id.is_empty() {
                continue;
            }
            if claims::find(id).is_none() {
                return Err(VerifyError::UnknownClaim(id.to_string()));
            }
            ids.insert(id.to_string());
        }
        Ok(Self(ids))
    }

    pub fn known_errata() -> Self {
        Self::parse(KNOWN_ERRATA).expect("checked-in allowlist names real claims")
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_rejects_unknown_ids() {
        let list = Allowlist::parse("# header\ncomplete/g+++  # K_n\n\n").unwrap();
        assert!(list.contains("complete/g+++"));
        assert!(!list.contains("cycle/g+++"));
        assert_eq!(
            Allowlist::parse("no-such/claim"),
            Err(VerifyError::UnknownClaim("no-such/claim".into()))
        );
    }

    #[test]
    fn checked_in_list_loads() {
        assert!(Allowlist::known_errata().ids().count() >= 1);
    }
}
