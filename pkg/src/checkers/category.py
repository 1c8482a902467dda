from typing import Optional

from src.core.checker import LawChecker
from src.core.fincat import FinCat, FinFunctor, NatTransSet, SetFunctor
from src.core.report import ReportBuilder, ValidationReport
from src.utils.logger import Logger


class CategoryChecker(LawChecker):

    def check_category(self, c: FinCat) -> ValidationReport:
        with self.sweep("category") as report:
            self._check_identities(c, report)
            self._check_table(c, report)
            self._check_units(c, report)
            self._check_associativity(c, report)
        return self.finish(report)

    def _check_identities(self, c: FinCat, report: ReportBuilder) -> None:
        for o in c.objects:
            report.cases += 1
            ident = c.identity.get(o)
            if ident is None or not c.has_morphism(ident):
                report.fail("identity-missing", [o], f"object {o} has no identity morphism")
                continue
            m = c.morphism(ident)
            if m.src != o or m.dst != o:
                report.fail("identity-shape", [o, ident], f"{ident} is {m.src}→{m.dst}, expected {o}→{o}")

    def _check_table(self, c: FinCat, report: ReportBuilder) -> None:
        for (f, g), fg in sorted(c.compose.items()):
            if not (c.has_morphism(f) and c.has_morphism(g) and c.has_morphism(fg)):
                report.fail("unknown-morphism", [f, g, fg], "composition entry names an unknown morphism")
                continue
            if c.dst(f) != c.src(g):
                report.fail("compose-undefined", [f, g], f"entry for non-composable pair ({f}, {g})")
                continue
            if c.src(fg) != c.src(f) or c.dst(fg) != c.dst(g):
                report.fail(
                    "compose-typing", [f, g, fg],
                    f"{fg} is {c.src(fg)}→{c.dst(fg)}, expected {c.src(f)}→{c.dst(g)}",
                )
        for f, g in c.composable_pairs():
            report.cases += 1
            if (f, g) not in c.compose:
                report.fail("compose-total", [f, g], f"no composite for composable pair ({f}, {g})")

    def _check_units(self, c: FinCat, report: ReportBuilder) -> None:
        for m in c.morphisms:
            left = c.identity.get(m.src)
            right = c.identity.get(m.dst)
            if left is not None and c.compose.get((left, m.id)) != m.id:
                report.fail("left-identity", [m.id], f"compose({left}, {m.id}) = {c.compose.get((left, m.id))}")
            if right is not None and c.compose.get((m.id, right)) != m.id:
                report.fail("right-identity", [m.id], f"compose({m.id}, {right}) = {c.compose.get((m.id, right))}")

    def _check_associativity(self, c: FinCat, report: ReportBuilder) -> None:
        for f, g in c.composable_pairs():
            fg = c.compose.get((f, g))
            if fg is None or not c.has_morphism(fg):
                continue
            for h in c.morphisms:
                if h.src != c.dst(g):
                    continue
                report.cases += 1
                gh = c.compose.get((g, h.id))
                if gh is None or not c.has_morphism(gh):
                    continue
                left = c.compose.get((fg, h.id))
                right = c.compose.get((f, gh))
                if left != right:
                    report.fail("associativity", [f, g, h.id], f"(fg)h = {left} but f(gh) = {right}")

    def check_functor(self, functor: FinFunctor) -> ValidationReport:
        c, d = functor.source, functor.target
        with self.sweep("functor") as report:
            for o in c.objects:
                report.cases += 1
                if o not in functor.on_objects or functor.on_objects[o] not in d.objects:
                    report.fail("object-map-total", [o], f"object {o} has no image in the target category")
            for m in c.morphisms:
                report.cases += 1
                image = functor.on_morphisms.get(m.id)
                if image is None or not d.has_morphism(image):
                    report.fail("morphism-map-total", [m.id], f"morphism {m.id} has no image in the target category")
                    continue
                if d.src(image) != functor.on_objects.get(m.src):
                    report.fail("src-preservation", [m.id, image], f"src({image}) = {d.src(image)}, expected image of {m.src}")
                if d.dst(image) != functor.on_objects.get(m.dst):
                    report.fail("dst-preservation", [m.id, image], f"dst({image}) = {d.dst(image)}, expected image of {m.dst}")
            for o in c.objects:
                ident = c.identity.get(o)
                target_ident = d.identity.get(functor.on_objects.get(o))
                if ident is not None and functor.on_morphisms.get(ident) != target_ident:
                    report.fail("identity-preservation", [o], f"image of {ident} is not the identity of the image object")
            for f, g in c.composable_pairs():
                fg = c.compose.get((f, g))
                ff, gg = functor.on_morphisms.get(f), functor.on_morphisms.get(g)
                if fg is None or ff is None or gg is None:
                    continue
                report.cases += 1
                if functor.on_morphisms.get(fg) != d.compose.get((ff, gg)):
                    report.fail("composition-preservation", [f, g], f"F({fg}) differs from F({f}) then F({g})")
        return self.finish(report)

    def check_set_functor(self, functor: SetFunctor) -> ValidationReport:
        c = functor.source
        with self.sweep("set functor") as report:
            for o in c.objects:
                if o not in functor.on_objects:
                    report.fail("object-total", [o], f"no element set for object {o}")
            for m in c.morphisms:
                fn = functor.on_morphisms.get(m.id)
                domain = functor.on_objects.get(m.src, ())
                codomain = set(functor.on_objects.get(m.dst, ()))
                if fn is None:
                    report.fail("function-total", [m.id], f"no function for morphism {m.id}")
                    continue
                for x in domain:
                    report.cases += 1
                    if x not in fn:
                        report.fail("function-total", [m.id, x], f"{m.id} is undefined on {x}")
                    elif fn[x] not in codomain:
                        report.fail("codomain", [m.id, x], f"{m.id}({x}) = {fn[x]} lies outside the set of {m.dst}")
            for o in c.objects:
                fn = functor.on_morphisms.get(c.identity.get(o), {})
                for x in functor.on_objects.get(o, ()):
                    if fn.get(x) != x:
                        report.fail("identity", [o, x], f"identity of {o} moves {x} to {fn.get(x)}")
            for f, g in c.composable_pairs():
                fg = c.compose.get((f, g))
                fn_f, fn_g, fn_fg = (functor.on_morphisms.get(k) for k in (f, g, fg))
                if fn_f is None or fn_g is None or fn_fg is None:
                    continue
                for x in functor.on_objects.get(c.src(f), ()):
                    report.cases += 1
                    if fn_g.get(fn_f.get(x)) != fn_fg.get(x):
                        report.fail("composition", [f, g, x], f"Sen({fg})({x}) differs from Sen({g})(Sen({f})({x}))")
        return self.finish(report)

    def check_reindexing(
        self, nat: NatTransSet, phi: FinFunctor, source: SetFunctor, target: SetFunctor, backward: bool = False
    ) -> ValidationReport:
        """``nat`` must run ``source ⇒ target∘φ``, or ``source∘φ ⇒ target`` when ``backward``."""
        builder = ReportBuilder()
        if nat.source_functor != source:
            builder.fail("alpha-shape", ["source-functor"], "α does not start at the expected sentence functor")
        if nat.target_functor != target:
            builder.fail("alpha-shape", ["target-functor"], "α does not land in the expected sentence functor")
        along, other = (nat.source_reindex, nat.target_reindex) if backward else (nat.target_reindex, nat.source_reindex)
        if (along or FinFunctor.identity(nat.base)) != phi:
            builder.fail("alpha-shape", ["reindex"], "α is not reindexed along φ")
        if other is not None and other != FinFunctor.identity(other.source):
            builder.fail("alpha-shape", ["reindex"], "α is reindexed on the wrong side")
        return builder.build()

    def check_naturality(self, nat: NatTransSet) -> ValidationReport:
        base = nat.base
        source, target = nat.source_functor, nat.target_functor
        with self.sweep("naturality") as report:
            for o in base.objects:
                component = nat.components.get(o)
                if component is None:
                    report.fail("component-total", [o], f"no component at {o}")
                    continue
                codomain = set(target.on_objects.get(nat.target_obj(o), ()))
                for x in source.on_objects.get(nat.source_obj(o), ()):
                    if x not in component:
                        report.fail("component-total", [o, x], f"component at {o} is undefined on {x}")
                    elif component[x] not in codomain:
                        report.fail("component-codomain", [o, x], f"component at {o} sends {x} outside its target set")
            if report.violations:
                return self.finish(report)
            for m in base.morphisms:
                f_source = source.on_morphisms.get(nat.source_mor(m.id), {})
                f_target = target.on_morphisms.get(nat.target_mor(m.id), {})
                for x in source.on_objects[nat.source_obj(m.src)]:
                    report.cases += 1
                    left = f_target.get(nat.components[m.src][x])
                    right = nat.components[m.dst].get(f_source.get(x))
                    if left != right:
                        report.fail("naturality", [m.id, x], f"square at {m.id} on {x}: {left} vs {right}")
        return self.finish(report)


def check_category(c: FinCat, logger: Optional[Logger] = None) -> ValidationReport:
    return CategoryChecker(logger=logger).check_category(c)


def check_functor(functor: FinFunctor, logger: Optional[Logger] = None) -> ValidationReport:
    return CategoryChecker(logger=logger).check_functor(functor)


def check_set_functor(functor: SetFunctor, logger: Optional[Logger] = None) -> ValidationReport:
    return CategoryChecker(logger=logger).check_set_functor(functor)


def check_naturality(nat: NatTransSet, logger: Optional[Logger] = None) -> ValidationReport:
    return CategoryChecker(logger=logger).check_naturality(nat)
