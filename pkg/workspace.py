# -*- coding: utf-8 -*-
"""
Модуль для завантаження робочих просторів.

Розбирає рядковий формат робочого простору та файли кортежів,
валідуючи дані через Pydantic моделі. Усі помилки несуть номер рядка.

Формат:
    domain <int>
    gamma <name> = { <int>[, <int>]* }   або   gamma <name> = {}
    cross <name> = <gname>+
    set <name> = <crossname>+
Порожні рядки та коментарі «# …» пропускаються.
"""

import re
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from exceptions import CrossCloneError, UsageError
from logger_config import LoggerMixin
from models import Cross, Domain, ExtensionalRelation, Language, RelationSet, Workspace
from relcore import make_domain, make_unary

_NAME = r'[A-Za-z_][A-Za-z0-9_]*'
_DOMAIN_RE = re.compile(r'^domain\s+(\d+)$')
_GAMMA_RE = re.compile(rf'^gamma\s+({_NAME})\s*=\s*\{{\s*(.*?)\s*\}}$')
_LIST_RE = re.compile(rf'^(cross|set)\s+({_NAME})\s*=(.*)$')


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


class WorkspaceParser(LoggerMixin):
    """Розбір робочих просторів і файлів кортежів."""

    def parse(self, text: str) -> Workspace:
        """
        Розбирає текст робочого простору.

        Args:
            text: Вміст файлу

        Returns:
            Валідований робочий простір

        Raises:
            UsageError: синтаксис, невідоме ім'я, елемент поза A,
                повторне розширення, порожній список параметрів
        """
        domain_line: Optional[Tuple[int, int]] = None
        gammas: List[Tuple[int, str, List[int]]] = []
        crosses: List[Tuple[int, str, List[str]]] = []
        sets: List[Tuple[int, str, List[str]]] = []

        for number, raw in enumerate(text.splitlines(), start=1):
            line = _strip_comment(raw)
            if not line:
                continue

            match = _DOMAIN_RE.match(line)
            if match:
                if domain_line is not None:
                    raise UsageError("Повторне оголошення domain", line=number)
                domain_line = (number, int(match.group(1)))
                continue

            match = _GAMMA_RE.match(line)
            if match:
                gammas.append((number, match.group(1), self._parse_members(match.group(2), number)))
                continue

            match = _LIST_RE.match(line)
            if match:
                kind, name, rest = match.groups()
                names = rest.split()
                if not names:
                    what = "Хрест має арність не менше 1" if kind == "cross" else "Множина має містити хрест"
                    raise UsageError(f"{what}: {name}", line=number)
                if any(not re.fullmatch(_NAME, item) for item in names):
                    raise UsageError(f"Неправильне ім'я у визначенні {name}", line=number)
                (crosses if kind == "cross" else sets).append((number, name, names))
                continue

            raise UsageError(f"Синтаксична помилка: {line!r}", line=number)

        if domain_line is None:
            raise UsageError("Відсутнє оголошення domain")

        domain = self._build_domain(*domain_line)
        language = self._build_language(domain, gammas)
        cross_map = self._build_crosses(language, crosses)
        set_map = self._build_sets(language, cross_map, sets)

        self.logger.debug(
            f"Робочий простір: |A|={domain.size}, |Γ|={language.dimension}, "
            f"{len(cross_map)} хрестів, {len(set_map)} множин"
        )
        members = {name: tuple(names) for _, name, names in sets}
        return Workspace(
            domain=domain, language=language,
            crosses=cross_map, sets=set_map, set_members=members,
        )

    def load(self, path: str) -> Workspace:
        """Завантажує робочий простір з файлу або stdin («-»)."""
        return self.parse(self._read(path))

    def parse_tuples(self, text: str, domain: Domain) -> ExtensionalRelation:
        """
        Розбирає файл кортежів: один кортеж на рядок, цілі через пробіл.

        Raises:
            UsageError: різна арність, елемент поза A, порожній файл
        """
        rows = []
        arity = None
        for number, raw in enumerate(text.splitlines(), start=1):
            line = _strip_comment(raw)
            if not line:
                continue
            try:
                row = tuple(int(part) for part in line.split())
            except ValueError:
                raise UsageError(f"Кортеж має містити лише цілі числа: {line!r}", line=number)
            if arity is None:
                arity = len(row)
            elif len(row) != arity:
                raise UsageError(f"Кортеж арності {len(row)}, очікувалось {arity}", line=number)
            if any(not 0 <= a < domain.size for a in row):
                raise UsageError(f"Елемент поза A у кортежі {row}", line=number)
            rows.append(row)

        if arity is None:
            raise UsageError("Файл кортежів порожній: арність невідома")
        return ExtensionalRelation(domain=domain, arity=arity, tuples=frozenset(rows))

    def load_tuples(self, path: str, domain: Domain) -> ExtensionalRelation:
        return self.parse_tuples(self._read(path), domain)

    @staticmethod
    def _read(path: str) -> str:
        if path == "-":
            return sys.stdin.read()
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise UsageError(f"Не вдалося прочитати {path}: {e.strerror}") from e

    @staticmethod
    def _parse_members(body: str, number: int) -> List[int]:
        if not body:
            return []
        try:
            return [int(part) for part in re.split(r'\s*,\s*', body)]
        except ValueError:
            raise UsageError(f"Неправильний список елементів: {{{body}}}", line=number)

    @staticmethod
    def _build_domain(number: int, size: int) -> Domain:
        try:
            return make_domain(size)
        except CrossCloneError as e:
            raise UsageError(e.message, line=number) from e

    @staticmethod
    def _build_language(domain: Domain, gammas: List[Tuple[int, str, List[int]]]) -> Language:
        relations = []
        seen_names: Dict[str, int] = {}
        seen_bits: Dict[tuple, str] = {}
        for number, name, members in gammas:
            if name in seen_names:
                raise UsageError(f"Повторне ім'я відношення: {name}", line=number)
            try:
                relation = make_unary(domain, name, members)
            except CrossCloneError as e:
                raise UsageError(e.message, line=number) from e
            if relation.bits in seen_bits:
                raise UsageError(
                    f"Відношення {name} повторює розширення {seen_bits[relation.bits]}", line=number
                )
            seen_names[name] = number
            seen_bits[relation.bits] = name
            relations.append(relation)
        try:
            return Language(domain=domain, gammas=tuple(relations))
        except ValidationError as e:
            raise UsageError(e.errors()[0]["msg"]) from e

    @staticmethod
    def _build_crosses(language: Language, crosses: List[Tuple[int, str, List[str]]]) -> Dict[str, Cross]:
        result: Dict[str, Cross] = {}
        for number, name, params in crosses:
            if name in result:
                raise UsageError(f"Повторне ім'я хреста: {name}", line=number)
            indices = []
            for param in params:
                index = language.index_of(param)
                if index is None:
                    raise UsageError(f"Невідоме відношення: {param}", line=number)
                indices.append(index)
            result[name] = Cross(language=language, params=tuple(indices))
        return result

    @staticmethod
    def _build_sets(language: Language, crosses: Dict[str, Cross],
                    sets: List[Tuple[int, str, List[str]]]) -> Dict[str, RelationSet]:
        result: Dict[str, RelationSet] = {}
        for number, name, members in sets:
            if name in result:
                raise UsageError(f"Повторне ім'я множини: {name}", line=number)
            missing = [member for member in members if member not in crosses]
            if missing:
                raise UsageError(f"Невідомий хрест: {missing[0]}", line=number)
            result[name] = RelationSet(language=language, crosses=tuple(crosses[m] for m in members))
        return result


def render_workspace(workspace: Workspace) -> List[str]:
    """Канонічний текст робочого простору."""
    lines = [f"domain {workspace.domain.size}"]
    for gamma in workspace.language.gammas:
        members = ", ".join(str(a) for a in sorted(gamma.members))
        lines.append(f"gamma {gamma.name} = {{{members}}}" if members else f"gamma {gamma.name} = {{}}")
    names = [g.name for g in workspace.language.gammas]
    for name in sorted(workspace.crosses):
        params = " ".join(names[i] for i in workspace.crosses[name].params)
        lines.append(f"cross {name} = {params}")
    for name in sorted(workspace.sets):
        lines.append(f"set {name} = {' '.join(workspace.set_members[name])}")
    return lines


# Глобальний екземпляр парсера
workspace_parser = WorkspaceParser()


def parse_workspace(text: str) -> Workspace:
    """Розбирає текст робочого простору (див. WorkspaceParser.parse)."""
    return workspace_parser.parse(text)


__all__ = [
    'WorkspaceParser',
    'workspace_parser',
    'parse_workspace',
    'render_workspace',
]
