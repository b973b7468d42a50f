#pragma once

#include "doctest.h"

#include "ainf/report.hpp"

inline void require_pass(const ainf::CheckReport& r) {
  INFO(r.name << ": " << r.detail
               << (r.witness ? " input=" + r.witness->input + " expected=" + r.witness->expected +
                                   " got=" + r.witness->got
                             : std::string()));
  CHECK(r.passed());
}
