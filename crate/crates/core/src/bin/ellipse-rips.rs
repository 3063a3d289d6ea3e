fn main() -> std::process::ExitCode {
    ellipse_rips::cli::run(std::env::args_os())
}
