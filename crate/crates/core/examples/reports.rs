//! Building, merging and serializing reports.
//!
//! cargo run --example reports

use macforge::report::{Report, ReportParams};
use macforge::verify::{verify_formulas, VerifyOptions};
use macforge::{Family, GroupParams};

fn main() {
    let opts = VerifyOptions {
        samples: 10_000,
        seed: 5,
        skip_oracle: true,
        ..Default::default()
    };
    let r = verify_formulas(Family::K, GroupParams::new(3, 1).unwrap(), opts).unwrap();
    print!("{r}");

    let mut mine = Report::new(ReportParams {
        command: "custom".into(),
        ..Default::default()
    });
    mine.check_eq("two_plus_two", 4, 2 + 2, 0);
    mine.extend(r);
    let json = mine.to_json();
    assert_eq!(Report::from_json(&json).unwrap(), mine);
    println!(
        "{} checks, pass = {}, {} bytes of JSON",
        mine.checks.len(),
        mine.pass,
        json.len()
    );

    let empty = Report::new(Default::default());
    println!("empty report passes: {}", empty.pass);
}
