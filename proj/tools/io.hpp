#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainf/homotopy.hpp"
#include "ainf/obstruction.hpp"
#include "ainf/vanishing.hpp"

namespace ainf::io {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

struct ValidationError : std::runtime_error {
  ValidationError(const std::string& entity, const std::string& what)
      : std::runtime_error(entity + ": " + what), entity(entity) {}
  std::string entity;
};

// Entities keep the order of the input file.
template <class T>
struct Named {
  std::string name;
  T value;
};

struct ModuleEntry {
  std::string algebra;
  std::shared_ptr<TableModule> module;
};

struct MapEntry {
  std::string source;
  std::string target;
  Hom map;
  bool strict = true;  // all components have arity zero
};

struct BimoduleEntry {
  std::string left;
  std::string right;
  std::shared_ptr<TableBimodule> bimodule;
};

struct HomotopyEntry {
  std::string f;
  std::optional<std::string> g;  // absent: g is obtained by flowing f along h
  MultiOp h;
};

struct InversionEntry {
  std::string phi;
  std::string psi;
  std::optional<std::string> h;
  std::optional<std::string> l;  // absent: solved at arity zero
};

struct SpecDocument {
  RingRef ring = nullptr;
  Grading grading = Grading::integer();
  std::size_t weight_cap = 4;
  std::size_t arity_cap = 4;
  std::vector<Named<AlgebraRef>> algebras;
  std::vector<Named<ModuleEntry>> modules;
  std::vector<Named<std::shared_ptr<const AInfMorphism>>> morphisms;
  std::vector<Named<MapEntry>> module_maps;
  std::vector<Named<BimoduleEntry>> bimodules;
  std::vector<Named<MatrixFactorization>> matrix_factorizations;
  std::vector<Named<HomotopyEntry>> homotopies;
  std::vector<Named<InversionEntry>> inversions;

  AlgebraRef algebra(const std::string& name) const;
  const ModuleEntry& module(const std::string& name) const;
  std::shared_ptr<const AInfMorphism> morphism(const std::string& name) const;
  const MapEntry& module_map(const std::string& name) const;
};

// "ZZ", "QQ", "ZZ/7", "QQ[x,y]", "ZZ/5[t]".
RingRef parse_ring(const std::string& text);

SpecDocument load(const std::filesystem::path& path);
SpecDocument load_string(const std::string& text, const std::string& origin = "<string>");

// Serializes a document with b-form tables and explicit units. Module maps
// are tabulated on inputs of weight <= cap. Loading the result gives an
// equivalent document.
std::string dump(const SpecDocument& doc, std::size_t cap);

}  // namespace ainf::io
