#pragma once

namespace vandinv {

/// Row/cell-parallel kernels take an execution policy; `serial` is the
/// reference path the parallel one is tested against.
enum class Execution { serial, parallel };

}  // namespace vandinv
