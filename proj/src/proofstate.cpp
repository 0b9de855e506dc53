#include "induction/proofstate.hpp"

#include <algorithm>
#include <sstream>

namespace induction {

std::string print_motivation(const Motivation& m) {
  switch (m.kind) {
    case MotivationKind::None: return "";
    case MotivationKind::Definition: return "definition " + m.function;
    case MotivationKind::InductionHypothesis: return "induction hypothesis";
    case MotivationKind::Given: return "given " + m.function;
    case MotivationKind::Calculation: return "calculation";
    case MotivationKind::Distribution: return "distribution";
  }
  return "";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

std::optional<Motivation> parse_motivation(std::string_view text) {
  std::string_view t = trim(text);
  auto word_arg = [&](std::string_view kw) -> std::optional<std::string> {
    if (!starts_with(t, kw) || t.size() <= kw.size() || !std::isspace(static_cast<unsigned char>(t[kw.size()])))
      return std::nullopt;
    std::string_view arg = trim(t.substr(kw.size()));
    if (arg.empty()) return std::nullopt;
    return std::string(arg);
  };
  if (t.empty()) return Motivation::none();
  if (t == "induction hypothesis" || t == "IH") return Motivation::hypothesis();
  if (t == "calculation" || t == "arithmetic") return Motivation::calculation();
  if (t == "distribution") return Motivation::distribution();
  if (auto fn = word_arg("definition")) return Motivation::definition(*fn);
  if (auto fn = word_arg("given")) return Motivation::given(*fn);
  return std::nullopt;
}

std::string to_string(const SubproofRef& ref) {
  if (ref.kind == SubproofRef::Kind::Base) return "base " + ref.atom;
  return "case " + std::string(symbol(ref.connective));
}

SubproofRef parse_subproof_ref(std::string_view text) {
  std::string_view t = trim(text);
  if (starts_with(t, "base ")) {
    std::string_view atom = trim(t.substr(5));
    if (!atom.empty()) return SubproofRef::base(std::string(atom));
  } else if (starts_with(t, "case ")) {
    if (auto c = connective_from_symbol(trim(t.substr(5)))) return SubproofRef::inductive(*c);
  }
  throw Error(ErrorCode::Parse, "not a subproof name: '" + std::string(t) + "'");
}

std::string_view to_string(ChainEnd end) { return end == ChainEnd::Top ? "top" : "bottom"; }

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::Base: return "base";
    case Phase::Hypothesis: return "hypothesis";
    case Phase::Inductive: return "inductive";
    case Phase::Done: return "done";
  }
  return "?";
}

Subproof* ProofState::find(const SubproofRef& ref) {
  for (auto& sp : subproofs)
    if (sp.ref == ref) return &sp;
  return nullptr;
}

const Subproof* ProofState::find(const SubproofRef& ref) const {
  for (const auto& sp : subproofs)
    if (sp.ref == ref) return &sp;
  return nullptr;
}

std::size_t ProofState::line_count() const {
  std::size_t n = hypotheses.size();
  for (const auto& sp : subproofs) n += sp.top.size() + sp.bottom.size();
  return n;
}

ProofState new_proof(const ExerciseSpec& spec) {
  ProofState s;
  s.exercise_id = spec.id;
  return s;
}

std::optional<Statement> subproof_goal(const ExerciseSpec& spec, const SubproofRef& ref) {
  CasePlan plan = case_analysis(spec);
  if (ref.kind == SubproofRef::Kind::Base) {
    for (const auto& b : plan.base_cases)
      if (b.atom == ref.atom) return b.goal;
  } else {
    for (const auto& c : plan.inductive_cases)
      if (c.connective == ref.connective) return c.goal;
  }
  return std::nullopt;
}

ProofState add_line(const ExerciseSpec& spec, ProofState state, const SubproofRef& ref, ChainEnd end,
                    ProofLine line) {
  if (!subproof_goal(spec, ref)) throw Error(ErrorCode::UnknownSubproof, "the exercise has no " + to_string(ref));
  Subproof* sp = state.find(ref);
  if (!sp) {
    state.subproofs.push_back(Subproof{ref, {}, {}, false});
    sp = &state.subproofs.back();
  }
  if (sp->closed) throw Error(ErrorCode::SubproofClosed, to_string(ref) + " is already closed");
  auto& chain = sp->chain(end);
  if (chain.empty())
    line.rel.reset();
  else if (!line.rel && line.motivation.kind != MotivationKind::None)
    line.rel = Comparator::Eq;
  chain.push_back(std::move(line));
  sp->closed = subproof_closes(spec, *sp);
  return state;
}

ProofState state_ih(ProofState state, const Statement& statement) {
  if (std::find(state.hypotheses.begin(), state.hypotheses.end(), statement) == state.hypotheses.end())
    state.hypotheses.push_back(statement);
  if (!state.ih_position) state.ih_position = state.subproofs.size();
  return state;
}

std::optional<Comparator> folded_relation(const Subproof& sp) {
  std::vector<Comparator> rels;
  for (std::size_t i = 1; i < sp.top.size(); ++i) rels.push_back(sp.top[i].rel.value_or(Comparator::Eq));
  for (std::size_t k = sp.bottom.size(); k-- > 1;) rels.push_back(sp.bottom[k].rel.value_or(Comparator::Eq));
  return fold_comparators(rels);
}

bool subproof_closes(const ExerciseSpec& spec, const Subproof& sp) {
  auto goal = subproof_goal(spec, sp.ref);
  if (!goal || sp.empty()) return false;
  bool ends_ok;
  if (sp.top.empty())
    ends_ok = calculation_equal(sp.bottom.front().expr, goal->rhs) && calculation_equal(sp.bottom.back().expr, goal->lhs);
  else if (sp.bottom.empty())
    ends_ok = sp.top.size() > 1 && calculation_equal(sp.top.front().expr, goal->lhs) &&
              calculation_equal(sp.top.back().expr, goal->rhs);
  else
    ends_ok = calculation_equal(sp.top.front().expr, goal->lhs) &&
              calculation_equal(sp.bottom.front().expr, goal->rhs) &&
              calculation_equal(sp.top.back().expr, sp.bottom.back().expr);
  if (!ends_ok) return false;
  auto rel = folded_relation(sp);
  return rel && comparator_implies(*rel, goal->comparator);
}

void refresh_closure(const ExerciseSpec& spec, ProofState& state) {
  for (auto& sp : state.subproofs) sp.closed = subproof_closes(spec, sp);
}

bool hypotheses_complete(const ExerciseSpec& spec, const ProofState& state) {
  for (const auto& h : case_analysis(spec).hypotheses)
    if (std::find(state.hypotheses.begin(), state.hypotheses.end(), h) == state.hypotheses.end()) return false;
  return true;
}

Phase phase(const ExerciseSpec& spec, const ProofState& state) {
  CasePlan plan = case_analysis(spec);
  auto closed = [&](const SubproofRef& r) {
    const Subproof* sp = state.find(r);
    return sp && sp->closed;
  };
  for (const auto& b : plan.base_cases)
    if (!closed(SubproofRef::base(b.atom))) return Phase::Base;
  if (!hypotheses_complete(spec, state)) return Phase::Hypothesis;
  for (const auto& c : plan.inductive_cases)
    if (!closed(SubproofRef::inductive(c.connective))) return Phase::Inductive;
  return Phase::Done;
}

bool is_done(const ExerciseSpec& spec, const ProofState& state) { return phase(spec, state) == Phase::Done; }

// ---------------------------------------------------------------------------
// Text format

namespace {

void write_rel(std::ostringstream& os, const ProofLine& line) {
  if (!line.rel && line.motivation.kind == MotivationKind::None) return;
  os << "  " << symbol(line.rel.value_or(Comparator::Eq));
  if (line.motivation.kind != MotivationKind::None) os << " (" << print_motivation(line.motivation) << ")";
  os << "\n";
}

void write_hypotheses(std::ostringstream& os, const ProofState& s) {
  os << "IH:\n";
  for (const auto& h : s.hypotheses) os << "  " << print_statement(h) << "\n";
}

}  // namespace

std::string serialize(const ProofState& state) {
  std::ostringstream os;
  os << "exercise: " << state.exercise_id << "\n";
  for (std::size_t i = 0; i <= state.subproofs.size(); ++i) {
    if (state.ih_position && std::min(*state.ih_position, state.subproofs.size()) == i) write_hypotheses(os, state);
    if (i == state.subproofs.size()) break;
    const Subproof& sp = state.subproofs[i];
    os << to_string(sp.ref) << ":\n";
    for (std::size_t k = 0; k < sp.top.size(); ++k) {
      if (k > 0) write_rel(os, sp.top[k]);
      os << "  " << print_expr(sp.top[k].expr) << "\n";
    }
    for (std::size_t k = sp.bottom.size(); k-- > 0;) {
      if (k + 1 < sp.bottom.size()) write_rel(os, sp.bottom[k + 1]);
      os << "  ^ " << print_expr(sp.bottom[k].expr) << "\n";
    }
  }
  return os.str();
}

namespace {

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : text_(text) {}

  ProofState run() {
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++lineno_;
      line(trim(text_.substr(start, end - start)));
      start = end + 1;
    }
    finish_section();
    if (!header_) fail("missing 'exercise:' header");
    return std::move(state_);
  }

 private:
  enum class Section { None, Subproof, Hypotheses };

  struct Pending {
    Comparator rel;
    Motivation motivation;
  };

  struct BottomItem {
    Expr expr;
    std::optional<Pending> before;
  };

  [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::Parse) const {
    throw Error(code, "line " + std::to_string(lineno_) + ": " + what, lineno_);
  }

  void line(std::string_view t) {
    if (t.empty() || t.front() == '#') return;
    if (!header_) {
      if (!starts_with(t, "exercise:")) fail("expected 'exercise: <id>'");
      state_.exercise_id = std::string(trim(t.substr(9)));
      if (state_.exercise_id.empty()) fail("missing exercise id");
      header_ = true;
      return;
    }
    if (t == "IH:") {
      finish_section();
      if (state_.ih_position) fail("duplicate IH section");
      state_.ih_position = state_.subproofs.size();
      section_ = Section::Hypotheses;
      return;
    }
    if (t.back() == ':' && (starts_with(t, "base ") || starts_with(t, "case "))) {
      finish_section();
      SubproofRef ref;
      try {
        ref = parse_subproof_ref(t.substr(0, t.size() - 1));
      } catch (const Error& e) {
        fail(e.what());
      }
      if (state_.find(ref)) fail("duplicate section '" + to_string(ref) + "'");
      state_.subproofs.push_back(Subproof{ref, {}, {}, false});
      section_ = Section::Subproof;
      return;
    }
    if (section_ == Section::None) fail("line outside a section");
    if (t == "?") {
      pending_.reset();
      return;
    }
    if (section_ == Section::Hypotheses) {
      Statement s;
      try {
        s = parse_statement(t);
      } catch (const Error& e) {
        fail(std::string("bad induction hypothesis: ") + e.what());
      }
      if (std::find(state_.hypotheses.begin(), state_.hypotheses.end(), s) == state_.hypotheses.end())
        state_.hypotheses.push_back(std::move(s));
      return;
    }
    if (auto p = comparator_line(t)) {
      if (pending_) fail("two comparator lines in a row");
      pending_ = p;
      return;
    }
    bool is_bottom = t.front() == '^';
    std::string_view body = is_bottom ? trim(t.substr(1)) : t;
    if (body.empty() || body == "?") {
      pending_.reset();
      return;
    }
    Expr e = expression(body);
    Subproof& sp = state_.subproofs.back();
    if (!is_bottom) {
      if (!bottom_.empty()) fail("top-chain line after the bottom chain");
      ProofLine l{e, std::nullopt, Motivation::none()};
      if (pending_) {
        if (sp.top.empty()) fail("comparator before the first line");
        l.rel = pending_->rel;
        l.motivation = pending_->motivation;
      }
      sp.top.push_back(std::move(l));
    } else {
      if (bottom_.empty() && pending_ && !sp.top.empty() &&
          (pending_->rel != Comparator::Eq || pending_->motivation.kind != MotivationKind::None))
        fail("the two chains meet without a step; put the step on the top chain");
      if (bottom_.empty() && pending_ && sp.top.empty()) fail("comparator before the first line");
      bottom_.push_back({e, bottom_.empty() ? std::nullopt : pending_});
    }
    pending_.reset();
  }

  std::optional<Pending> comparator_line(std::string_view t) const {
    std::size_t n = 0;
    if (starts_with(t, "<=") || starts_with(t, ">="))
      n = 2;
    else if (t.front() == '=' || t.front() == '<' || t.front() == '>')
      n = 1;
    else
      return std::nullopt;
    Comparator rel = *parse_comparator(t.substr(0, n));
    std::string_view rest = trim(t.substr(n));
    if (rest.empty()) return Pending{rel, Motivation::none()};
    if (rest.front() != '(' || rest.back() != ')') fail("malformed comparator line; expected '<comparator> (<justification>)'");
    auto m = parse_motivation(rest.substr(1, rest.size() - 2));
    if (!m) fail("unknown justification '" + std::string(rest.substr(1, rest.size() - 2)) + "'");
    return Pending{rel, *m};
  }

  Expr expression(std::string_view body) const {
    try {
      return parse_expr(body);
    } catch (const Error& first) {
      bool statement = false;
      try {
        parse_statement(body);
        statement = true;
      } catch (const Error&) {
      }
      if (statement)
        fail("statement on one line; write the left-hand side, the comparator and the right-hand side on separate lines",
             ErrorCode::StatementOnOneLine);
      fail(first.what());
    }
  }

  void finish_section() {
    if (section_ == Section::Subproof) {
      Subproof& sp = state_.subproofs.back();
      std::size_t m = bottom_.size();
      for (std::size_t k = 0; k < m; ++k) {
        ProofLine l{bottom_[m - 1 - k].expr, std::nullopt, Motivation::none()};
        if (k > 0 && bottom_[m - k].before) {
          l.rel = bottom_[m - k].before->rel;
          l.motivation = bottom_[m - k].before->motivation;
        }
        sp.bottom.push_back(std::move(l));
      }
    }
    bottom_.clear();
    pending_.reset();
    section_ = Section::None;
  }

  std::string_view text_;
  std::size_t lineno_ = 0;
  bool header_ = false;
  Section section_ = Section::None;
  std::optional<Pending> pending_;
  std::vector<BottomItem> bottom_;
  ProofState state_;
};

}  // namespace

ProofState deserialize(std::string_view text, const ExerciseSpec* spec) {
  ProofState s = DocumentParser(text).run();
  if (!spec) spec = find_exercise(s.exercise_id);
  if (spec) refresh_closure(*spec, s);
  return s;
}

}  // namespace induction
