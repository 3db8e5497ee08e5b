fn main() {
    std::process::exit(heckecat::cli::main_with(std::env::args_os()));
}
