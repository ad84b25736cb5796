fn main() {
    std::process::exit(sb3::cli::main_with_env());
}
