use realzeta::report::selftest::{criterion, Verdict};
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut failed = 0;
    for id in 1..=10 {
        let r = criterion(id);
        println!("{}", r.line());
        if r.verdict == Verdict::Fail || r.millis > 5000 {
            failed += 1;
        }
    }
    println!("acceptance: {} of 10 criteria failed outright", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
