#![no_main]

use libfuzzer_sys::fuzz_target;
use szego::bench::ExperimentConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = serde_json::from_str::<ExperimentConfig>(text) {
        // Any accepted config must re-serialize and parse back.
        let json = serde_json::to_string(&cfg).expect("config serializes");
        let _: ExperimentConfig = serde_json::from_str(&json).expect("round trip parses");
    }
});
