//! Driving the command-line front end from a key = value file, with flags taking precedence.

use heckecat::cli::main_with;

fn main() {
    let dir = std::env::temp_dir().join("heckecat-example");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let cfg = dir.join("tilt.cfg");
    std::fs::write(&cfg, "# SL2 tilting table\np = 7\nbound = 16\nformat = csv\n").expect("write config");
    let cfg = cfg.to_string_lossy().to_string();
    for args in [vec!["tilt", "--config", &cfg], vec!["tilt", "--config", &cfg, "--p", "3", "--bound", "8"]] {
        println!("$ heckecat {}", args.join(" "));
        let code = main_with(std::iter::once("heckecat").chain(args));
        println!("exit code {code}\n");
    }
}
