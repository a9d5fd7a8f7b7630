use std::io::Write;
use std::process::ExitCode;

use hqm_cli::{parse_config, run_to_string};

fn main() -> ExitCode {
    let cfg = match parse_config(std::env::args_os()) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run_to_string(&cfg).and_then(|(text, report)| {
        match &cfg.out {
            Some(path) => std::fs::write(path, &text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(report)
    });
    match result {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("hqm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
