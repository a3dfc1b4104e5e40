/**
 * Editable matrix grid.  Each cell is an <input>; invalid cells get an
 * error badge and block submission until fixed.
 */

import { parseNumericCell } from "./csv.js";

export interface GridCallbacks {
  onCellChange: (row: number, col: number, value: number | null) => void;
}

export function renderMatrixEditor(
  container: HTMLElement,
  title: string,
  rowLabels: string[],
  colLabels: string[],
  values: number[][],
  callbacks: GridCallbacks,
): void {
  container.textContent = "";
  const doc = container.ownerDocument;
  const caption = doc.createElement("h3");
  caption.textContent = title;
  container.appendChild(caption);

  const table = doc.createElement("table");
  table.className = "matrix-grid";
  const head = doc.createElement("tr");
  head.appendChild(doc.createElement("th")).textContent = "algorithm";
  for (const col of colLabels) {
    const th = doc.createElement("th");
    th.textContent = col;
    head.appendChild(th);
  }
  table.appendChild(head);

  rowLabels.forEach((name, r) => {
    const tr = doc.createElement("tr");
    const th = doc.createElement("th");
    th.textContent = name;
    tr.appendChild(th);
    colLabels.forEach((_, c) => {
      const td = doc.createElement("td");
      const input = doc.createElement("input");
      input.value = Number.isNaN(values[r][c]) ? "" : String(values[r][c]);
      input.dataset.row = String(r);
      input.dataset.col = String(c);
      input.addEventListener("input", () => {
        const parsed = parseNumericCell(input.value);
        if (typeof parsed === "string") {
          markCellError(td, parsed);
          callbacks.onCellChange(r, c, null);
        } else {
          clearCellError(td);
          callbacks.onCellChange(r, c, parsed);
        }
      });
      td.appendChild(input);
      tr.appendChild(td);
    });
    table.appendChild(tr);
  });
  container.appendChild(table);
}

export function markCellError(cell: HTMLElement, message: string): void {
  cell.classList.add("cell-error");
  let badge = cell.querySelector<HTMLElement>(".cell-badge");
  if (!badge) {
    badge = cell.ownerDocument.createElement("span");
    badge.className = "cell-badge";
    cell.appendChild(badge);
  }
  badge.textContent = message;
}

export function clearCellError(cell: HTMLElement): void {
  cell.classList.remove("cell-error");
  cell.querySelector(".cell-badge")?.remove();
}

export function badgeCells(container: HTMLElement, errors: { row: number; col: number; message: string }[]): void {
  for (const err of errors) {
    const input = container.querySelector<HTMLInputElement>(
      `input[data-row="${err.row}"][data-col="${err.col}"]`,
    );
    const td = input?.parentElement;
    if (td) markCellError(td, err.message);
  }
}

export function hasCellErrors(container: HTMLElement): boolean {
  return container.querySelector(".cell-error") !== null;
}
