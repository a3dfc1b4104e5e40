/**
 * Weight-sweep table: one row per grid point with the full order, the
 * stability region highlighted; clicking a row moves the weight slider.
 */

import type { SweepResponse } from "./api.js";

export function renderSweepTable(
  container: HTMLElement,
  response: SweepResponse,
  onPick: (wMu: number) => void,
): void {
  container.textContent = "";
  const doc = container.ownerDocument;
  const table = doc.createElement("table");
  table.className = "sweep-table";
  const head = doc.createElement("tr");
  head.innerHTML = "<th>[w_mu, w_sigma]</th><th>ranking</th>";
  table.appendChild(head);

  for (const entry of response.rankings) {
    const row = doc.createElement("tr");
    row.className = "sweep-row";
    row.dataset.wMu = String(entry.w_mu);
    const stable =
      response.stability_w_mu !== null && entry.w_mu >= response.stability_w_mu;
    if (stable) row.classList.add("stable");
    if (entry.w_mu === response.stability_w_mu) row.classList.add("stability-point");
    const wSigma = Math.round((1 - entry.w_mu) * 1e9) / 1e9;
    row.innerHTML =
      `<td>[${entry.w_mu}, ${wSigma}]</td>` +
      `<td>${entry.order.join(" &gt; ")}</td>`;
    row.addEventListener("click", () => onPick(entry.w_mu));
    table.appendChild(row);
  }
  container.appendChild(table);

  const note = doc.createElement("p");
  note.className = "stability-note";
  note.textContent =
    response.stability_w_mu === null
      ? "order not stable within this grid"
      : `order stable from w_mu = ${response.stability_w_mu}`;
  container.appendChild(note);
}
