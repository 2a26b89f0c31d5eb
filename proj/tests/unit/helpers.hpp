#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regsg/corpus.hpp"
#include "regsg/error.hpp"
#include "regsg/semigroup.hpp"

namespace regsg::testing {

  inline Element by_label(FiniteSemigroup const& S, std::string const& label) {
    for (Element a = 0; a < S.order(); ++a) {
      if (S.label(a) == label) {
        return a;
      }
    }
    throw std::runtime_error("no element labelled " + label + " in " + S.name());
  }

  inline std::vector<FiniteSemigroup> whole_corpus() {
    std::vector<FiniteSemigroup> out;
    for (auto const& name : corpus::names()) {
      out.push_back(corpus::by_name(name));
    }
    return out;
  }

  // Kind of the Error thrown by f, or "nothing".
  inline std::string thrown_kind(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return std::string(to_string(e.kind()));
    }
    return "nothing";
  }

  // Direct idempotent scan of the Cayley table.
  inline std::vector<Element> scan_idempotents(FiniteSemigroup const& S) {
    std::vector<Element> out;
    auto const           t = S.table();
    for (Element a = 0; a < S.order(); ++a) {
      if (t[a][a] == a) {
        out.push_back(a);
      }
    }
    return out;
  }

}  // namespace regsg::testing
