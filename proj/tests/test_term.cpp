#include <doctest.h>

#include <unordered_set>

#include "treeweight/term.hpp"

using namespace treeweight;

namespace {

TermPtr t(const char* root, std::vector<TermPtr> kids = {}) {
  return Term::make(root, std::move(kids));
}

}  // namespace

TEST_CASE("term size, height, printing") {
  TermPtr a = t("a");
  CHECK(a->size() == 1);
  CHECK(a->height() == 1);
  CHECK(to_string(a) == "a");

  TermPtr qpa = t("q", {t("p", {a})});
  CHECK(qpa->size() == 3);
  CHECK(qpa->height() == 3);
  CHECK(to_string(qpa) == "q(p(a))");

  TermPtr wide = t("f", {t("g", {a}), t("b")});
  CHECK(wide->size() == 4);
  CHECK(wide->height() == 3);
  CHECK(to_string(wide) == "f(g(a),b)");
}

TEST_CASE("structural equality is independent of sharing") {
  TermPtr shared = t("a");
  TermPtr x = t("f", {shared, shared});
  TermPtr y = t("f", {t("a"), t("a")});
  CHECK(term_equal(x, y));
  CHECK(x->hash() == y->hash());
  CHECK_FALSE(term_equal(x, t("f", {t("a"), t("b")})));
  CHECK_FALSE(term_equal(x, t("g", {t("a"), t("a")})));
}

TEST_CASE("preorder comparison follows the rank function") {
  auto rank = [](const std::string& s) { return static_cast<int>(s[0]); };

  CHECK(preorder_compare(*t("a"), *t("a"), rank) == 0);
  CHECK(preorder_compare(*t("a"), *t("b"), rank) < 0);
  CHECK(preorder_compare(*t("b"), *t("a"), rank) > 0);

  // same root, first differing position decides
  TermPtr x = t("f", {t("a"), t("c")});
  TermPtr y = t("f", {t("b"), t("a")});
  CHECK(preorder_compare(*x, *y, rank) < 0);

  // deep difference
  TermPtr dx = t("f", {t("g", {t("a")}), t("b")});
  TermPtr dy = t("f", {t("g", {t("b")}), t("a")});
  CHECK(preorder_compare(*dx, *dy, rank) < 0);

  // prefix case: the shorter preorder sequence sorts first
  CHECK(preorder_compare(*t("f", {t("a")}), *t("f", {t("f", {t("a")})}), rank) < 0);
}

TEST_CASE("hash set over structural equality") {
  std::unordered_set<TermPtr, TermPtrHash, TermPtrEqual> set;
  set.insert(t("f", {t("a")}));
  set.insert(t("f", {t("a")}));
  set.insert(t("f", {t("b")}));
  CHECK(set.size() == 2);
}
