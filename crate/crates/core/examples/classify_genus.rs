//! Full classification for one genus, printed as JSON.
//!
//! cargo run --release --example classify_genus -- 14 6

use surface_actions::extensions::classify_genus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (genus, lambda) = match args[..] {
        [g, l] => (g, l),
        _ => (12, 5),
    };
    let report = classify_genus(genus, lambda)?;
    for s in &report.strata {
        eprintln!("{:<26} {:<14} {} orbits", s.group_name, s.signature.to_string(), s.orbit_count);
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
