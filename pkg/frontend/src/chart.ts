/**
 * Bar chart of global closeness scores, built from plain DOM nodes.
 *
 * Bars appear exactly in the response's order (the client never re-sorts);
 * alternatives in one tie group share a wrapper that renders them merged.
 * Hovering a bar shows the stage-1 mean/std closeness when available.
 */

import type { RankResponse } from "./api.js";

export function renderBarChart(container: HTMLElement, response: RankResponse): void {
  container.textContent = "";
  container.classList.add("bar-chart");
  const maxXi = Math.max(...response.order.map((n) => response.xi[n]), 1e-12);

  for (const group of response.ties) {
    const wrapper = container.ownerDocument.createElement("div");
    wrapper.className = group.length > 1 ? "tie-group merged" : "tie-group";
    for (const name of group) {
      const xi = response.xi[name];
      const bar = container.ownerDocument.createElement("div");
      bar.className = "bar";
      bar.dataset.name = name;
      bar.dataset.xi = String(xi);
      bar.style.height = `${Math.round((xi / maxXi) * 100)}%`;
      if (response.stage1) {
        bar.title =
          `${name}: xi_G=${xi.toFixed(6)}  ` +
          `xi_mu=${response.stage1.xi_mu[name].toFixed(6)}  ` +
          `xi_sigma=${response.stage1.xi_sigma[name].toFixed(6)}`;
      } else {
        bar.title = `${name}: xi=${xi.toFixed(6)}`;
      }
      const label = container.ownerDocument.createElement("span");
      label.className = "bar-label";
      label.textContent = name;
      bar.appendChild(label);
      wrapper.appendChild(bar);
    }
    container.appendChild(wrapper);
  }
}

/** Bar names in on-screen order (for tests and the position readout). */
export function chartOrder(container: HTMLElement): string[] {
  return Array.from(container.querySelectorAll<HTMLElement>(".bar")).map(
    (el) => el.dataset.name ?? "",
  );
}
