from typing import Optional

from src.checkers.category import CategoryChecker
from src.core.checker import LawChecker
from src.core.institution import Institution, InstComorphism, InstMorphism
from src.core.report import ReportBuilder, ValidationReport
from src.utils.logger import Logger


class InstitutionChecker(LawChecker):

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.category_checker = CategoryChecker(self.cap, self.search_bound, self.logger)

    def check_satisfaction_condition(self, institution: Institution) -> ValidationReport:
        sig, sen = institution.sig, institution.sen
        with self.sweep("satisfaction condition") as report:
            for h in sig.morphisms:
                reduct = institution.mod_reduct.get(h.id, {})
                translate = sen.on_morphisms.get(h.id, {})
                for phi in sen.on_objects.get(h.src, ()):
                    if phi not in translate:
                        report.fail("translation-total", [h.id, phi], f"Sen({h.id}) is undefined on {phi}")
                for m2 in institution.mod_objects.get(h.dst, ()):
                    m1 = reduct.get(m2)
                    if m1 is None:
                        report.fail("reduct-total", [h.id, m2], f"reduct of {h.id} is undefined on {m2}")
                        continue
                    for phi in sen.on_objects.get(h.src, ()):
                        report.cases += 1
                        if phi not in translate:
                            continue
                        translated = institution.satisfies(h.dst, m2, translate[phi])
                        reduced = institution.satisfies(h.src, m1, phi)
                        if translated != reduced:
                            report.fail(
                                "satisfaction-condition", [h.id, m2, phi],
                                f"{m2} ⊨ {translate[phi]} is {translated} but {m1} ⊨ {phi} is {reduced}",
                            )
        return self.finish(report)

    def check_model_functor(self, institution: Institution) -> ValidationReport:
        sig = institution.sig
        with self.sweep("model functor") as report:
            self._check_order(institution, report)
            for h in sig.morphisms:
                reduct = institution.mod_reduct.get(h.id)
                if reduct is None:
                    report.fail("reduct-total", [h.id], f"no reduct for {h.id}")
                    continue
                codomain = set(institution.mod_objects.get(h.src, ()))
                for m in institution.mod_objects.get(h.dst, ()):
                    report.cases += 1
                    if m not in reduct:
                        report.fail("reduct-total", [h.id, m], f"reduct of {h.id} is undefined on {m}")
                    elif reduct[m] not in codomain:
                        report.fail("reduct-codomain", [h.id, m], f"{h.id} reduces {m} to {reduct[m]} outside Mod({h.src})")
                for m in institution.mod_objects.get(h.dst, ()):
                    for n in institution.mod_objects.get(h.dst, ()):
                        if m != n and institution.leq(h.dst, m, n) and m in reduct and n in reduct:
                            if not institution.leq(h.src, reduct[m], reduct[n]):
                                report.fail("reduct-monotone", [h.id, m, n], f"{h.id} does not preserve {m} ≤ {n}")
            for o in sig.objects:
                reduct = institution.mod_reduct.get(sig.identity.get(o), {})
                for m in institution.mod_objects.get(o, ()):
                    if reduct.get(m) != m:
                        report.fail("reduct-identity", [o, m], f"reduct along the identity of {o} moves {m}")
            for f, g in sig.composable_pairs():
                fg = sig.compose.get((f, g))
                red_f, red_g, red_fg = (institution.mod_reduct.get(k) for k in (f, g, fg))
                if red_f is None or red_g is None or red_fg is None:
                    continue
                for m in institution.mod_objects.get(sig.dst(g), ()):
                    report.cases += 1
                    if red_fg.get(m) != red_f.get(red_g.get(m)):
                        report.fail(
                            "contravariance", [f, g, m],
                            f"Mod({fg})({m}) = {red_fg.get(m)} but Mod({f})(Mod({g})({m})) = {red_f.get(red_g.get(m))}",
                        )
        return self.finish(report)

    def _check_order(self, institution: Institution, report: ReportBuilder) -> None:
        for o, pairs in institution.mod_order.items():
            models = set(institution.mod_objects.get(o, ()))
            for m, n in sorted(pairs):
                if m not in models or n not in models:
                    report.fail("order-domain", [o, m, n], "order relates unknown models")
                elif m != n and (n, m) in pairs:
                    report.fail("order-antisymmetry", [o, m, n], f"{m} ≤ {n} and {n} ≤ {m}")
            for m, n in sorted(pairs):
                for n2, k in sorted(pairs):
                    if n == n2 and m != k and not institution.leq(o, m, k):
                        report.fail("order-transitivity", [o, m, n, k], f"{m} ≤ {n} ≤ {k} but not {m} ≤ {k}")

    def validate_institution(self, institution: Institution) -> ValidationReport:
        builder = ReportBuilder()
        builder.include(self.category_checker.check_category(institution.sig))
        builder.include(self.category_checker.check_set_functor(institution.sen))
        builder.include(self.check_model_functor(institution))
        if not builder.violations:
            builder.include(self.check_satisfaction_condition(institution))
        return builder.build()

    def check_inst_comorphism(self, f: InstComorphism, source: Institution, target: Institution) -> ValidationReport:
        builder = ReportBuilder()
        self._check_shape(f.phi, source, target, builder)
        if not builder.violations:
            builder.include(self.category_checker.check_reindexing(f.alpha, f.phi, source.sen, target.sen))
        if builder.violations:
            return builder.build()
        builder.include(self.category_checker.check_functor(f.phi))
        builder.include(self.category_checker.check_naturality(f.alpha))
        if builder.violations:
            return builder.build()
        with self.sweep("comorphism") as report:
            phi = f.phi
            for o in source.sig.objects:
                beta = f.beta.get(o, {})
                codomain = set(source.mod_objects.get(o, ()))
                for m2 in target.mod_objects.get(phi.obj(o), ()):
                    if m2 not in beta:
                        report.fail("beta-total", [o, m2], f"β at {o} is undefined on {m2}")
                    elif beta[m2] not in codomain:
                        report.fail("beta-codomain", [o, m2], f"β at {o} sends {m2} outside Mod({o})")
            if not report.violations:
                for h in source.sig.morphisms:
                    for m2 in target.mod_objects.get(phi.obj(h.dst), ()):
                        report.cases += 1
                        left = source.reduct(h.id, f.beta[h.dst][m2])
                        right = f.beta[h.src][target.reduct(phi.mor(h.id), m2)]
                        if left != right:
                            report.fail("beta-naturality", [h.id, m2], f"square at {h.id} on {m2}: {left} vs {right}")
                for o in source.sig.objects:
                    for m2 in target.mod_objects.get(phi.obj(o), ()):
                        m1 = f.beta[o][m2]
                        for sentence in source.sen.universe(o):
                            report.cases += 1
                            translated = target.satisfies(phi.obj(o), m2, f.alpha.apply(o, sentence))
                            reduced = source.satisfies(o, m1, sentence)
                            if translated != reduced:
                                report.fail(
                                    "compatibility", [o, m2, sentence],
                                    f"{m2} ⊨' α({sentence}) is {translated} but β({m2}) = {m1} ⊨ {sentence} is {reduced}",
                                )
        builder.include(report.build())
        return builder.build()

    def check_inst_morphism(self, h: InstMorphism, source: Institution, target: Institution) -> ValidationReport:
        builder = ReportBuilder()
        self._check_shape(h.phi, source, target, builder)
        if not builder.violations:
            builder.include(self.category_checker.check_reindexing(h.alpha, h.phi, target.sen, source.sen, backward=True))
        if builder.violations:
            return builder.build()
        builder.include(self.category_checker.check_functor(h.phi))
        builder.include(self.category_checker.check_naturality(h.alpha))
        if builder.violations:
            return builder.build()
        with self.sweep("morphism") as report:
            phi = h.phi
            for o in source.sig.objects:
                beta = h.beta.get(o, {})
                codomain = set(target.mod_objects.get(phi.obj(o), ()))
                for m in source.mod_objects.get(o, ()):
                    if m not in beta:
                        report.fail("beta-total", [o, m], f"β at {o} is undefined on {m}")
                    elif beta[m] not in codomain:
                        report.fail("beta-codomain", [o, m], f"β at {o} sends {m} outside Mod'(Φ({o}))")
            if not report.violations:
                for f in source.sig.morphisms:
                    for m in source.mod_objects.get(f.dst, ()):
                        report.cases += 1
                        left = target.reduct(phi.mor(f.id), h.beta[f.dst][m])
                        right = h.beta[f.src][source.reduct(f.id, m)]
                        if left != right:
                            report.fail("beta-naturality", [f.id, m], f"square at {f.id} on {m}: {left} vs {right}")
                for o in source.sig.objects:
                    for m in source.mod_objects.get(o, ()):
                        m2 = h.beta[o][m]
                        for sentence in target.sen.universe(phi.obj(o)):
                            report.cases += 1
                            here = source.satisfies(o, m, h.alpha.apply(o, sentence))
                            there = target.satisfies(phi.obj(o), m2, sentence)
                            if here != there:
                                report.fail(
                                    "compatibility", [o, m, sentence],
                                    f"{m} ⊨ α({sentence}) is {here} but β({m}) = {m2} ⊨' {sentence} is {there}",
                                )
        builder.include(report.build())
        return builder.build()

    def _check_shape(self, phi, source: Institution, target: Institution, builder: ReportBuilder) -> None:
        if phi.source != source.sig:
            builder.fail("signature-mismatch", ["source"], "φ does not start at the source signature category")
        if phi.target != target.sig:
            builder.fail("signature-mismatch", ["target"], "φ does not land in the target signature category")


def check_satisfaction_condition(institution: Institution, logger: Optional[Logger] = None) -> ValidationReport:
    return InstitutionChecker(logger=logger).check_satisfaction_condition(institution)


def validate_institution(institution: Institution, logger: Optional[Logger] = None) -> ValidationReport:
    return InstitutionChecker(logger=logger).validate_institution(institution)


def check_inst_comorphism(
    f: InstComorphism, source: Institution, target: Institution, logger: Optional[Logger] = None
) -> ValidationReport:
    return InstitutionChecker(logger=logger).check_inst_comorphism(f, source, target)


def check_inst_morphism(
    h: InstMorphism, source: Institution, target: Institution, logger: Optional[Logger] = None
) -> ValidationReport:
    return InstitutionChecker(logger=logger).check_inst_morphism(h, source, target)
