// Copyright (c) 2026 dlpengine contributors
// SPDX-License-Identifier: MIT

#include "dlp/cli.hpp"

int main(int argc, char** argv) { return dlp::cli::run_cli(argc, argv); }
