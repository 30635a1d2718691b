// SPDX-License-Identifier: Apache-2.0
#include "qtel/cli.hpp"

int main(int argc, char** argv) { return qtel::run_cli(argc, argv); }
