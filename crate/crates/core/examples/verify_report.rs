use gwa_core::verify::{verify_all, VerifyConfig};
use gwa_core::ZPoly;

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(2)
        .map(|a| a.parse().expect("integer coefficient"))
        .collect();
    let bound = std::env::args()
        .nth(1)
        .and_then(|b| b.parse().ok())
        .unwrap_or(3);
    let cfg = VerifyConfig {
        bound,
        ..VerifyConfig::default()
    };
    let report = verify_all(&ZPoly::from_ints(&args), &cfg).expect("nonzero p");
    println!("{report}");
}
