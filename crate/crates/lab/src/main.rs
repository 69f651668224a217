fn main() {
    std::process::exit(rollout_lab::cli::run(std::env::args_os()));
}
