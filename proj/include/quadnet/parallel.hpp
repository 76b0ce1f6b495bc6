#pragma once

namespace quadnet {

/// Kernels with an OpenMP path keep a serial reference path; tests compare
/// the two and the benchmark target times them against each other.
enum class Exec { serial, parallel };

int hardwareThreads();

} // namespace quadnet
