// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "app.hpp"

int main(int argc, char** argv) { return wightlab::app::main_entry(argc, argv); }
