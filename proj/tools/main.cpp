// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.

#include "counters/cli.hpp"

int main(int argc, char** argv) { return counters::run(argc, argv); }
