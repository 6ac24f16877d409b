#pragma once

#include "fitch/compute.hpp"
#include "fitch/error.hpp"
#include "fitch/graph.hpp"
#include "fitch/io.hpp"
#include "fitch/oracle.hpp"
#include "fitch/recognition.hpp"
#include "fitch/synthesis.hpp"
#include "fitch/tree.hpp"
