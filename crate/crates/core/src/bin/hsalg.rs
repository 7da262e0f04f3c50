fn main() -> std::process::ExitCode {
    hsalg_core::cli::main_with_args(std::env::args_os())
}
