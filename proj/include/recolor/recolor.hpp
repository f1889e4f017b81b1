#pragma once

#include <recolor/bench.hpp>
#include <recolor/cli.hpp>
#include <recolor/coloring.hpp>
#include <recolor/fpt.hpp>
#include <recolor/gadgets/bk.hpp>
#include <recolor/gadgets/forbidding_path.hpp>
#include <recolor/gadgets/list_to_plain.hpp>
#include <recolor/gadgets/np_reduction.hpp>
#include <recolor/gadgets/w1_reduction.hpp>
#include <recolor/graph.hpp>
#include <recolor/instance.hpp>
#include <recolor/io.hpp>
#include <recolor/oracle.hpp>
#include <recolor/solve.hpp>
#include <recolor/xp.hpp>
