fn main() {
    std::process::exit(defrad_cli::run(std::env::args_os()));
}
