//! Line formats for emitted proofs:
//!
//! * certificate: `target-id<TAB>gen-id:coeff,gen-id:coeff,...`
//! * witness: `target-id<TAB>{subset}=p/q {subset}=p/q ...`
//!
//! Target ids are free-form tokens without tabs or newlines.

use super::{FarkasCertificate, SeparationWitness};
use crate::entspace::{parse_rational, EntropyVector};
use crate::{Error, Result};

fn check_id(id: &str) -> Result<()> {
    if id.contains(['\t', '\n']) || id.is_empty() {
        return Err(Error::Parse(format!("invalid target id `{id}`")));
    }
    Ok(())
}

pub fn format_certificate_record(target_id: &str, cert: &FarkasCertificate) -> Result<String> {
    check_id(target_id)?;
    Ok(format!("{target_id}\t{cert}"))
}

pub fn parse_certificate_record(line: &str) -> Result<(String, FarkasCertificate)> {
    let (id, body) = line
        .split_once('\t')
        .ok_or_else(|| Error::Parse(format!("certificate record lacks a tab: `{line}`")))?;
    check_id(id)?;
    let mut terms = Vec::new();
    for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, c) = item
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `gen-id:coeff`, got `{item}`")))?;
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator id `{k}`")))?;
        terms.push((k, parse_rational(c)?));
    }
    Ok((id.to_string(), FarkasCertificate { terms }))
}

pub fn format_witness_record(target_id: &str, witness: &SeparationWitness) -> Result<String> {
    check_id(target_id)?;
    Ok(format!("{target_id}\t{}", witness.point))
}

pub fn parse_witness_record(n: usize, line: &str) -> Result<(String, SeparationWitness)> {
    let (id, body) = line
        .split_once('\t')
        .ok_or_else(|| Error::Parse(format!("witness record lacks a tab: `{line}`")))?;
    check_id(id)?;
    Ok((
        id.to_string(),
        SeparationWitness {
            point: EntropyVector::parse(n, body)?,
        },
    ))
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::entspace::witness_fulldim;

    #[test]
    fn certificate_round_trip() {
        let cert = FarkasCertificate {
            terms: vec![
                (0, BigRational::new(1.into(), 2.into())),
                (17, BigRational::from_integer(3.into())),
            ],
        };
        let line = format_certificate_record("J({1};{2};{};{})", &cert).unwrap();
        assert_eq!(line, "J({1};{2};{};{})\t0:1/2,17:3");
        let (id, back) = parse_certificate_record(&line).unwrap();
        assert_eq!(id, "J({1};{2};{};{})");
        assert_eq!(back, cert);

        let (_, empty) = parse_certificate_record("t\t").unwrap();
        assert!(empty.is_empty());
        assert!(parse_certificate_record("no-tab").is_err());
        assert!(parse_certificate_record("t\t1:").is_err());
        assert!(format_certificate_record("a\tb", &cert).is_err());
    }

    #[test]
    fn witness_round_trip() {
        let w = SeparationWitness {
            point: witness_fulldim(3).unwrap(),
        };
        let line = format_witness_record("7", &w).unwrap();
        let (id, back) = parse_witness_record(3, &line).unwrap();
        assert_eq!(id, "7");
        assert_eq!(back, w);
    }
}
