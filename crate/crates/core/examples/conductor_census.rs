//! A small census: every cyclic cocycle on C_4 over F_5, with the number of
//! maximal orders checked against the center decomposition, and the
//! bimultiplicative cocycles on C_2 × C_2 over F_9 with a acting by Frobenius.
use crossed_order::shell::{run_census, CensusSpec};

fn main() -> crossed_order::Result<()> {
    let spec = CensusSpec::parse(
        r#"{
          "version": "crossed-order/1",
          "entries": [
            {"field": {"kind": "prime", "p": 5}, "group": "cyclic:4", "family": "cyclic"},
            {"field": {"kind": "extension", "p": 3, "modulus": [1, 0, 1]}, "group": "klein4",
             "action": {"frobenius": {"a": 1, "ab": 1}}, "ramification": {"1": 1, "b": 2},
             "family": "bimult"}
          ]
        }"#,
    );
    let report = run_census(&spec?)?;
    print!("{}", report.to_text());
    Ok(())
}
