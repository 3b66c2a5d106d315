#![no_main]

use libfuzzer_sys::fuzz_target;
use szego::parse::{format_complex, parse_complex};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_complex(text) {
        // Accepted literals must survive a format/parse round trip when the
        // components are finite (non-finite floats have no literal form).
        if v.re.is_finite() && v.im.is_finite() {
            let again = parse_complex(&format_complex(v)).expect("round trip parses");
            assert_eq!(again, v, "round trip changed the value");
        }
    }
});
