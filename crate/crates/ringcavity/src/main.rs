fn main() {
    std::process::exit(ringcavity::cli::run(std::env::args_os()));
}
