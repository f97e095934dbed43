# -*- coding: utf-8 -*-
"""
Обробники команд CLI.

Кожен обробник отримує розібрані аргументи, викликає бібліотечні
сервіси та повертає детерміновані рядки звіту «ключ: значення».
"""

from argparse import Namespace
from typing import List, Optional

from config import AppConfig, config, default_arity
from cloneorder import CloneOrderService, encode_I
from downsets import DownsetEnumerator, render_downset
from exceptions import SemanticError, UsageError
from handlers.utils import kv, render_row, render_selection, reports_errors, yes_no
from logger_config import LoggerMixin
from models import BoundedBox, CountReport, Cross, RelationSet, Verdict, Workspace
from patterns import render_pattern
from polymorph import PolymorphismEngine, render_operation
from relcore import cross_pattern, make_cross, reconstruct_parameters
from workspace import WorkspaceParser, render_workspace


class CommandHandlers(LoggerMixin):
    """Клас для обробки команд CLI."""

    def __init__(self, settings: Optional[AppConfig] = None):
        """
        Ініціалізація обробників команд.

        Args:
            settings: Конфігурація з бюджетами (за замовчуванням глобальна)
        """
        self.settings = settings or config
        self.engine = PolymorphismEngine(self.settings)
        self.enumerator = DownsetEnumerator(self.settings)
        self.clone_order = CloneOrderService(self.engine, self.enumerator)
        self.parser = WorkspaceParser()
        self.logger.debug("Ініціалізація обробників команд")

    def _workspace(self, args: Namespace) -> Workspace:
        if not getattr(args, "workspace", None):
            raise UsageError(f"Команда {args.command} потребує --workspace")
        return self.parser.load(args.workspace)

    @staticmethod
    def _cross(workspace: Workspace, name: str) -> Cross:
        if name not in workspace.crosses:
            raise UsageError(f"Невідомий хрест: {name}")
        return workspace.crosses[name]

    @staticmethod
    def _set(workspace: Workspace, name: str) -> RelationSet:
        if name not in workspace.sets:
            raise UsageError(f"Невідома множина: {name}")
        return workspace.sets[name]

    def _arity(self, workspace: Workspace, args: Namespace) -> int:
        arity = getattr(args, "arity", None)
        if arity is None:
            return default_arity(workspace.domain.size, self.settings)
        if arity < 1:
            raise UsageError(f"Арність має бути додатною, отримано {arity}")
        return arity

    @reports_errors
    def show_command(self, args: Namespace) -> List[str]:
        """Канонічний вигляд робочого простору."""
        return render_workspace(self._workspace(args))

    @reports_errors
    def pattern_command(self, args: Namespace) -> List[str]:
        """Патерн pt(ρ) іменованого хреста."""
        workspace = self._workspace(args)
        rho = self._cross(workspace, args.cross)
        return [
            kv("cross", args.cross),
            kv("arity", rho.arity),
            kv("pattern", render_pattern(cross_pattern(rho))),
        ]

    @reports_errors
    def reconstruct_command(self, args: Namespace) -> List[str]:
        """Відновлення параметрів відношення з файлу кортежів."""
        workspace = self._workspace(args)
        relation = self.parser.load_tuples(args.tuples, workspace.domain)
        params = reconstruct_parameters(relation, workspace.language, budget=self.settings.expansion_budget)
        if params is None:
            raise SemanticError("Відношення не є диз'юнктивно визначуваним з Γ")
        names = [workspace.language.gammas[i].name for i in params]
        return [
            kv("arity", relation.arity),
            kv("params", " ".join(names)),
            kv("pattern", render_pattern(cross_pattern(make_cross(workspace.language, params)))),
        ]

    @reports_errors
    def encode_command(self, args: Namespace) -> List[str]:
        """Кодування I(Q) іменованої множини."""
        workspace = self._workspace(args)
        relations = self._set(workspace, args.set)
        return [kv("set", args.set), kv("downset", render_downset(encode_I(relations)))]

    @reports_errors
    def compare_command(self, args: Namespace) -> List[str]:
        """Патерновий вердикт, а потім обмежений перебір для Pol(Q2) ⊆ Pol(Q1)."""
        workspace = self._workspace(args)
        first, second = self._set(workspace, args.first), self._set(workspace, args.second)
        arity = self._arity(workspace, args)
        certificate, brute = self.clone_order.compare(first, second, arity)

        if brute.verdict == Verdict.REFUTED:
            outcome = f"refuted by {render_operation(brute.counterexample)}"
        else:
            outcome = "counterexample-free"
        return [
            kv("pattern", certificate.verdict.value),
            kv(f"brute-force(k={arity})", outcome),
        ]

    @reports_errors
    def kernel_command(self, args: Namespace) -> List[str]:
        """Перевірка: рівні кодування дають рівні обмежені клони."""
        workspace = self._workspace(args)
        first, second = self._set(workspace, args.first), self._set(workspace, args.second)
        report = self.clone_order.kernel_check(first, second, self._arity(workspace, args))
        lines = [
            kv("encodings-equal", yes_no(report.encodings_equal)),
            kv("verdict", report.verdict.value),
        ]
        if report.separating is not None:
            lines.append(kv("separating", render_operation(report.separating)))
        return lines

    @reports_errors
    def pol_command(self, args: Namespace) -> List[str]:
        """Розміри Pol_k(Q) за арностями та, за бажанням, самі таблиці."""
        workspace = self._workspace(args)
        relations = self._set(workspace, args.set)
        clone = self.clone_order.pol(relations, self._arity(workspace, args))
        lines = [kv(f"arity {n}", clone.count(n)) for n in range(1, clone.max_arity + 1)]
        lines.append(kv("total", clone.count()))
        if args.list:
            for n in range(1, clone.max_arity + 1):
                lines.extend(kv("op", render_operation(f)) for f in clone.operations(n))
        return lines

    @reports_errors
    def chain_command(self, args: Namespace) -> List[str]:
        """Перевірка спадного ω-ланцюга для γ до M."""
        workspace = self._workspace(args)
        gamma = workspace.language.index_of(args.gamma)
        if gamma is None:
            raise UsageError(f"Невідоме відношення: {args.gamma}")
        report = self.clone_order.verify_chain(workspace.language, gamma, args.max)

        lines = [kv("gamma", args.gamma)]
        for step in report.steps:
            details = (
                f"witness {render_operation(step.witness.operation)}"
                f" zero={step.witness.zero} one={step.witness.one}"
                f" preserves-previous={yes_no(step.preserves_previous)}"
                f" breaks-current={yes_no(step.breaks_current)}"
            )
            if step.violation is not None:
                details += (
                    f" selection {render_selection(step.violation.selection)}"
                    f" -> {render_row(step.violation.image)}"
                )
            lines.append(kv(f"m={step.m}", details))
        lines.append(kv("separations", report.separations))
        lines.append(kv("verdict", report.verdict.value))
        return lines

    @reports_errors
    def count_downsets_command(self, args: Namespace) -> List[str]:
        """Кількість нижніх конусів ящика, за бажанням з оракулом."""
        if args.dims < 0 or args.bound < 0:
            raise UsageError("Розмірність і межа мають бути невід'ємними")
        box = BoundedBox(dimension=args.dims, bound=args.bound)
        report = CountReport(
            box=box,
            count=self.enumerator.count_box_downsets(box),
            oracle=self.enumerator.subset_oracle_count(box) if args.oracle else None,
        )
        if report.oracle is None:
            return [kv("count", report.count)]
        return [f"count: {report.count} oracle: {report.oracle} agree: {yes_no(report.agrees)}"]

    @reports_errors
    def catalogue_command(self, args: Namespace) -> List[str]:
        """Каталог конусів ящика з підписами обмежених клонів."""
        workspace = self._workspace(args)
        report = self.clone_order.catalogue(workspace.language, args.bound, self._arity(workspace, args))
        lines = [
            kv("downsets", report.downset_count),
            kv("signatures", report.signature_count),
            kv("inequality", "holds" if report.inequality_holds else "violated"),
        ]
        lines.extend(
            kv(render_downset(entry.downset), f"signature {entry.signature_id}")
            for entry in report.entries
        )
        return lines

    @reports_errors
    def psi_command(self, args: Namespace) -> List[str]:
        """Обмежене наближення ψ(Pol Q)."""
        workspace = self._workspace(args)
        relations = self._set(workspace, args.set)
        downset = self.clone_order.psi_bounded(relations, args.bound, self._arity(workspace, args))
        return [kv("psi", render_downset(downset)), kv("approximation", "yes")]


__all__ = ['CommandHandlers']
