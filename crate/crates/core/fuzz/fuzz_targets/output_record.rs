#![no_main]

use libfuzzer_sys::fuzz_target;
use moduli_cli::OutputRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(record) = serde_json::from_slice::<OutputRecord>(data) else {
        return;
    };
    let line = serde_json::to_string(&record).expect("serializable");
    let back: OutputRecord = serde_json::from_str(&line).expect("round trip");
    assert_eq!(back, record);
    if let Ok(p) = record.to_poly() {
        let _ = p.to_plain();
        let _ = p.to_latex();
    }
});
