#ifndef SEIDEL_SEIDEL_HPP
#define SEIDEL_SEIDEL_HPP

#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "harness.hpp"
#include "json_io.hpp"
#include "multipartite.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "spectrum.hpp"
#include "switching.hpp"
#include "tripartite.hpp"

#endif
